#include "cli.hpp"

#include "chpos/errors.hpp"
#include "chpos/slopes.hpp"
#include "chpos/spec_text.hpp"
#include "report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace chpos::cli {

namespace {

enum class Format { md, json };

struct Options {
  Format format = Format::md;
  int jobs = 1;
  int nmax = 8;
  int rmax = 3;
  int dmax = 4;
};

std::vector<long> parse_degrees(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Rational q = parse_rational(item);
    if (denominator(q) != 1) throw ParseError("degree '" + item + "' is not an integer");
    out.push_back(numerator(q).convert_to<long>());
  }
  if (out.empty()) throw ParseError("empty degree list");
  return out;
}

long parse_long(const std::string& text) { return parse_degrees(text).at(0); }

std::string fraction(const Rational& q) { return numerator(q).str() + "/" + denominator(q).str(); }

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + to_string(xs[i]);
  return out;
}

nlohmann::json fractions(const std::vector<Rational>& xs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(fraction(x));
  return out;
}

void need(const std::vector<std::string>& args, std::size_t count, const std::string& usage) {
  if (args.size() != count) throw ParseError("usage: slopes " + usage);
}

// Returns (markdown text, json value).
std::pair<std::string, nlohmann::json> slopes_command(const std::vector<std::string>& all) {
  if (all.empty()) throw ParseError("slopes needs a subcommand");
  const std::string sub = all.front();
  const std::vector<std::string> args(all.begin() + 1, all.end());
  using namespace slopes;
  if (sub == "mu") {
    need(args, 2, "mu DEG RANK");
    const Rational m = mu(parse_long(args[0]), parse_long(args[1]));
    return {to_string(m), {{"mu", fraction(m)}}};
  }
  if (sub == "mu-cover") {
    need(args, 3, "mu-cover COVER_DEG DEG RANK");
    const Rational m = mu_cover({parse_long(args[0])}, parse_long(args[1]), parse_long(args[2]));
    return {to_string(m), {{"mu", fraction(m)}}};
  }
  if (sub == "muk") {
    need(args, 2, "muk D1,..,DR K");
    const Rational m = mu_k_split(SplitCurveBundle(parse_degrees(args[0])), static_cast<int>(parse_long(args[1])));
    return {to_string(m), {{"mu_k", fraction(m)}}};
  }
  if (sub == "chain") {
    need(args, 1, "chain D1,..,DR");
    const auto chain = chain_check(SplitCurveBundle(parse_degrees(args[0])));
    return {join(chain), {{"chain", fractions(chain)}}};
  }
  if (sub == "ample") {
    need(args, 1, "ample D1,..,DR");
    const bool a = is_ample_split(SplitCurveBundle(parse_degrees(args[0])));
    return {a ? "true" : "false", {{"ample", a}}};
  }
  if (sub == "semistable") {
    need(args, 1, "semistable D1,..,DR");
    const bool s = is_semistable_split(SplitCurveBundle(parse_degrees(args[0])));
    return {s ? "true" : "false", {{"semistable", s}}};
  }
  if (sub == "thm-epsilon") {
    need(args, 1, "thm-epsilon D1,..,DR");
    const auto c = thm_epsilon_check(SplitCurveBundle(parse_degrees(args[0])));
    std::string md = to_string(c.mu1_dual) + " >= " + to_string(c.mu_dual) + (c.holds ? ": holds" : ": fails");
    return {md, {{"mu1_dual", fraction(c.mu1_dual)}, {"mu_dual", fraction(c.mu_dual)}, {"holds", c.holds}}};
  }
  if (sub == "schedule") {
    need(args, 2, "schedule D1,..,DR EPSILON");
    const SplitCurveBundle e(parse_degrees(args[0]));
    const auto cert = epsilon_quotient_schedule(e, parse_rational(args[1]));
    std::ostringstream md;
    md << "epsilon: " << to_string(cert.epsilon) << "\ncover degree: " << cert.cover_degree.str()
       << "\nbound: " << to_string(mu(e) + cert.epsilon) << "\n\n| k | slope of E^k |\n|---|---|\n";
    for (std::size_t i = 0; i < cert.slopes.size(); ++i) {
      md << "| " << cert.slopes.size() - i << " | " << to_string(cert.slopes[i]) << " |\n";
    }
    return {md.str(),
            {{"epsilon", fraction(cert.epsilon)},
             {"cover_degree", cert.cover_degree.str()},
             {"slopes", fractions(cert.slopes)},
             {"satisfied", cert.satisfied(mu(e))}}};
  }
  if (sub == "zhang") {
    if (args.size() != 2 && args.size() != 3) throw ParseError("usage: slopes zhang R DEG_E [D1,..,D(R-1)]");
    const int r = static_cast<int>(parse_long(args[0]));
    const std::vector<long> d = args.size() == 3 ? parse_degrees(args[2]) : std::vector<long>{};
    const auto t = zhang_slope_trace(r, parse_long(args[1]), d);
    std::ostringstream md;
    md << "deg f = " << t.cover_degree.str() << "\ndeg L = " << t.line_degree.str()
       << "\nmu_B(L) = " << to_string(t.line_slope) << (t.slope_matches ? " (matches deg E)" : " (mismatch)");
    return {md.str(),
            {{"cover_degree", t.cover_degree.str()},
             {"line_degree", t.line_degree.str()},
             {"line_slope", fraction(t.line_slope)},
             {"matches", t.slope_matches}}};
  }
  if (sub == "witness") {
    need(args, 2, "witness SPACE W1,..,WR");
    const ModelPtr base = build(parse_spec(args[0]));
    std::vector<int> twists;
    for (long w : parse_degrees(args[1])) twists.push_back(static_cast<int>(w));
    const auto w = prop_ch2P_witness(*base, twists);
    std::ostringstream md;
    md << "F = O(" << twists[w.first] << ") + O(" << twists[w.second] << ")\nvalue = " << to_string(w.value)
       << (w.value < 0 ? " (ch2 not nef)" : " (pairing zero: nef, not weakly positive)");
    return {md.str(),
            {{"sub_twists", {twists[w.first], twists[w.second]}},
             {"value", fraction(w.value)},
             {"semistable", w.semistable}}};
  }
  throw ParseError("unknown slopes subcommand '" + sub + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern-character positivity calculator", "chpos"};
  Options opt;
  std::string format = "md";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"md", "json"}));
  app.add_option("--jobs", opt.jobs, "Worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--nmax", opt.nmax, "Largest ambient dimension in searches")->check(CLI::PositiveNumber);
  app.add_option("--rmax", opt.rmax, "Largest codimension in the CI search")->check(CLI::PositiveNumber);
  app.add_option("--dmax", opt.dmax, "Largest hypersurface degree in the CI search")->check(CLI::PositiveNumber);
  app.set_config("--config", "", "key=value defaults; flags override");
  app.require_subcommand(1);

  std::string spec_text;
  auto* describe_cmd = app.add_subcommand("describe", "Chern characters, verdicts and Fano flag of a space");
  describe_cmd->add_option("spec", spec_text, "Space, e.g. \"PB(P(2); O(-2), O(0))\"")->required();
  describe_cmd->fallthrough();

  auto* search_cmd = app.add_subcommand("search", "Grid searches");
  search_cmd->require_subcommand(1);
  search_cmd->fallthrough();
  auto* ci_cmd = search_cmd->add_subcommand("ci", "Complete intersections in P^n");
  ci_cmd->fallthrough();
  auto* pb_cmd = search_cmd->add_subcommand("pbundle", "P(O(-a) + O) over degree-d hypersurfaces");
  pb_cmd->fallthrough();

  std::vector<std::string> slope_args;
  auto* slopes_cmd = app.add_subcommand("slopes", "Slope calculus for split bundles on curves");
  slopes_cmd->add_option("args", slope_args, "SUBCOMMAND ARGS...")->required();
  slopes_cmd->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  opt.format = format == "json" ? Format::json : Format::md;

  try {
    std::string md;
    nlohmann::json js;
    if (*describe_cmd) {
      const Report r = describe(parse_spec(spec_text));
      md = to_markdown(r);
      js = to_json(r);
    } else if (*ci_cmd) {
      const auto rows = search_ci(opt.nmax, opt.rmax, opt.dmax, opt.jobs);
      md = to_markdown(rows);
      js = to_json(rows);
    } else if (*pb_cmd) {
      const auto fams = search_pbundle(opt.nmax, opt.jobs);
      md = to_markdown(fams);
      js = to_json(fams);
    } else if (*slopes_cmd) {
      auto [text, value] = slopes_command(slope_args);
      md = text + "\n";
      js = std::move(value);
    }
    if (opt.format == Format::json) {
      out << js.dump(2) << "\n";
    } else {
      out << md;
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvariantFailure& e) {
    err << "invariant failure: " << e.what() << "\n";
    return kInvariantFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  }
}

}  // namespace chpos::cli
