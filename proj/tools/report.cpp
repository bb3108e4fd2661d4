#include "report.hpp"

#include "chpos/chern.hpp"
#include "chpos/errors.hpp"
#include "chpos/spec_text.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace chpos::cli {

namespace {

// Evaluates f(0..count-1) on up to `jobs` threads; results keep index order.
template <class F>
auto parallel_map(std::size_t count, int jobs, F f) -> std::vector<decltype(f(std::size_t{0}))> {
  using T = decltype(f(std::size_t{0}));
  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t n = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::string join(const std::vector<int>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

std::string fraction(const Rational& q) { return numerator(q).str() + "/" + denominator(q).str(); }

bool has_linear_section(const SpaceSpec& spec) {
  if (const auto* ci = std::get_if<CompleteIntersectionSpec>(&spec.node)) {
    return std::find(ci->degrees.begin(), ci->degrees.end(), 1) != ci->degrees.end();
  }
  if (const auto* pb = std::get_if<ProjectiveBundleSpec>(&spec.node)) return has_linear_section(*pb->base);
  if (const auto* pr = std::get_if<ProductSpec>(&spec.node)) {
    return has_linear_section(*pr->left) || has_linear_section(*pr->right);
  }
  return false;
}

std::string verdict_text(const PositivityVerdict& v) {
  std::string out = v.describe();
  if (v.witness) out += "; witness " + v.witness->label + " (pairing " + to_string(v.witness->pairing) + ")";
  return out;
}

}  // namespace

Report describe(const SpaceSpec& spec) {
  const ModelPtr model = build(spec);
  const ChernCharacter ch = ch_tangent(*model);
  Report r;
  r.spec = render(spec);
  r.dim = model->dim();
  r.ch1 = ch.ch(1);
  r.verdict_ch1 = classify(*r.ch1, *model);
  r.provenance = r.verdict_ch1.provenance;
  if (model->dim() >= 2) {
    r.ch2 = ch.ch(2);
    r.verdict_ch2 = classify(*r.ch2, *model);
    r.provenance = weakest(r.provenance, r.verdict_ch2.provenance);
  } else {
    r.notes.push_back("dimension one: ch2 vanishes identically");
  }
  const ConeTest fano = is_fano(*model);
  r.fano = fano.holds;
  r.fano_witness = fano.witness;

  if (const auto* g = std::get_if<GrassmannianData>(&model->data); g && g->n == 2 * g->k && g->k > 1) {
    r.notes.push_back("discrepancy: for G(k,2k) the degree-two expansion gives ch2 = s1^2, which lies on the ray of "
                      "s1^2; the computed value is reported unchanged");
  }
  if (has_linear_section(spec)) r.notes.push_back("reducible-to-smaller-n: a degree-1 section re-embeds the base");
  if (const auto* b = std::get_if<BundleData>(&model->data); b && b->normalized_twists != b->twists) {
    r.notes.push_back("twists normalized to (" + join(b->normalized_twists, ", ") + ")");
  }
  if (r.provenance == Provenance::candidate) {
    r.notes.push_back("verdicts are relative to declared cones of candidate provenance");
  }
  if (r.ch2 && r.verdict_ch2.ample == AmpleStatus::boundary) {
    r.notes.push_back("ch2 lies on the boundary of the closed ample cone");
  }
  if (!r.fano && r.fano_witness) {
    r.notes.push_back("c1 pairs to " + to_string(r.fano_witness->pairing) + " with curve " + r.fano_witness->label);
  }
  return r;
}

nlohmann::json class_json(const CycleClass& c) {
  nlohmann::json out = nlohmann::json::object();
  if (c.overflow()) return out;
  const auto& labels = c.ring()->basis(c.codim());
  for (std::size_t i = 0; i < c.coords().size(); ++i) {
    if (c.coords()[i] != 0) out[labels[i].str()] = fraction(c.coords()[i]);
  }
  return out;
}

nlohmann::json verdict_json(const PositivityVerdict& v) {
  nlohmann::json out{{"level", to_string(v.level)},
                     {"description", v.describe()},
                     {"provenance", to_string(v.provenance)},
                     {"ample", to_string(v.ample)}};
  if (v.witness) {
    out["witness"] = {{"label", v.witness->label},
                      {"pairing", fraction(v.witness->pairing)},
                      {"class", class_json(v.witness->generator)}};
  }
  return out;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json out{{"spec", r.spec},
                     {"dim", r.dim},
                     {"ch1", r.ch1 ? class_json(*r.ch1) : nlohmann::json(nullptr)},
                     {"ch2", r.ch2 ? class_json(*r.ch2) : nlohmann::json(nullptr)},
                     {"verdict_ch1", verdict_json(r.verdict_ch1)},
                     {"verdict_ch2", r.ch2 ? verdict_json(r.verdict_ch2) : nlohmann::json(nullptr)},
                     {"fano", r.fano},
                     {"provenance", to_string(r.provenance)},
                     {"notes", r.notes}};
  return out;
}

std::string to_markdown(const Report& r) {
  std::ostringstream os;
  os << "# " << r.spec << "\n\n";
  os << "| field | value |\n|---|---|\n";
  os << "| dim | " << r.dim << " |\n";
  os << "| ch1 | " << to_string(*r.ch1) << " |\n";
  os << "| ch2 | " << (r.ch2 ? to_string(*r.ch2) : "0") << " |\n";
  os << "| ch1 verdict | " << verdict_text(r.verdict_ch1) << " |\n";
  os << "| ch2 verdict | " << (r.ch2 ? verdict_text(r.verdict_ch2) : "n/a") << " |\n";
  os << "| Fano | " << (r.fano ? "yes" : "no") << " |\n";
  os << "| provenance | " << to_string(r.provenance) << " |\n";
  if (!r.notes.empty()) {
    os << "\nNotes:\n";
    for (const auto& n : r.notes) os << "- " << n << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

void degree_lists(int r, int lo, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int d = lo; d <= hi; ++d) {
    cur.push_back(d);
    degree_lists(r, d, hi, cur, out);
    cur.pop_back();
  }
}

SpaceSpec hypersurface(int n, std::vector<int> degrees) {
  return SpaceSpec{CompleteIntersectionSpec{make_spec({ProjectiveSpaceSpec{n}}), std::move(degrees)}};
}

}  // namespace

std::vector<CiRow> search_ci(int n_max, int r_max, int d_max, int jobs) {
  if (n_max < 1 || r_max < 1 || d_max < 1) throw ParameterError("search bounds must be positive");
  std::vector<std::pair<int, std::vector<int>>> tasks;
  for (int n = 3; n <= n_max; ++n) {
    for (int r = 1; r <= std::min(r_max, n - 2); ++r) {
      std::vector<std::vector<int>> lists;
      std::vector<int> cur;
      degree_lists(r, 1, d_max, cur, lists);
      for (auto& d : lists) tasks.emplace_back(n, std::move(d));
    }
  }
  return parallel_map(tasks.size(), jobs, [&](std::size_t i) {
    const auto& [n, degrees] = tasks[i];
    const ModelPtr model = build(hypersurface(n, degrees));
    const CycleClass ch2 = ch_tangent(*model).ch(2);
    CiRow row{n, degrees, model->dim(), to_string(ch2), is_fano(*model).holds, classify(ch2, *model),
              std::find(degrees.begin(), degrees.end(), 1) != degrees.end()};
    return row;
  });
}

bool closed_form_member(int n, int d, int a) {
  if (d < 1 || 2 * n * d > n * n + n + 1) return false;
  if (a > n - d) return false;
  const int need = d * d - n - 1;
  // ceil(sqrt(max(0, need))) <= a  <=>  a >= 0 and a^2 >= need
  return a >= 0 && (need <= 0 || a * a >= need);
}

std::vector<BundleFamily> search_pbundle(int n_max, int jobs) {
  if (n_max < 2) throw ParameterError("search pbundle needs nmax >= 2");
  struct Task {
    int n, d, a;
  };
  std::vector<Task> tasks;
  for (int n = 3; n <= n_max; ++n)
    for (int d = 1; d <= n + 1; ++d)
      for (int a = 0; a <= n + 1; ++a) tasks.push_back({n, d, a});
  auto rows = parallel_map(tasks.size(), jobs, [&](std::size_t i) {
    const Task t = tasks[i];
    const SpaceSpec spec{ProjectiveBundleSpec{make_spec(hypersurface(t.n, {t.d})), {-t.a, 0}}};
    const ModelPtr model = build(spec);
    const ConeTest fano = is_fano(*model);
    const PositivityVerdict v = classify(ch_tangent(*model).ch(2), *model);
    BundleRow row{t.n, t.d, t.a, fano.holds, v, fano.holds && v.level >= Level::nef,
                  closed_form_member(t.n, t.d, t.a), ""};
    std::vector<std::string> why;
    if (!fano.holds) why.push_back("not Fano: c1 pairs to " + to_string(fano.witness->pairing) + " with " +
                                   fano.witness->label);
    if (v.level < Level::nef) why.push_back("ch2 not nef: pairs to " + to_string(v.witness->pairing) + " with " +
                                            v.witness->label);
    for (std::size_t k = 0; k < why.size(); ++k) row.failure += (k ? "; " : "") + why[k];
    return row;
  });
  std::vector<BundleFamily> out;
  out.push_back({2, false, {}, true});
  for (auto& row : rows) {
    if (out.back().n != row.n) out.push_back({row.n, true, {}, true});
    out.back().agree = out.back().agree && row.machinery == row.closed_form;
    out.back().rows.push_back(std::move(row));
  }
  if (n_max < 3) out.resize(1);
  return out;
}

nlohmann::json to_json(const std::vector<CiRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"n", r.n},
                       {"degrees", r.degrees},
                       {"dim", r.dim},
                       {"ch2", r.ch2},
                       {"fano", r.fano},
                       {"verdict_ch2", verdict_json(r.verdict)}};
    if (r.linear_section) row["flags"] = {"reducible-to-smaller-n"};
    out.push_back(std::move(row));
  }
  return out;
}

std::string to_markdown(const std::vector<CiRow>& rows) {
  std::ostringstream os;
  os << "| n | degrees | dim | ch2 | Fano | ch2 verdict | flags |\n|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.n << " | " << join(r.degrees, ",") << " | " << r.dim << " | " << r.ch2 << " | "
       << (r.fano ? "yes" : "no") << " | " << verdict_text(r.verdict) << " | "
       << (r.linear_section ? "reducible-to-smaller-n" : "") << " |\n";
  }
  return os.str();
}

nlohmann::json to_json(const std::vector<BundleFamily>& families) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : families) {
    nlohmann::json fam{{"n", f.n}, {"in_domain", f.in_domain}, {"agree", f.agree}};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : f.rows) {
      rows.push_back({{"d", r.d},
                      {"a", r.a},
                      {"fano", r.fano},
                      {"verdict_ch2", verdict_json(r.verdict)},
                      {"machinery", r.machinery},
                      {"closed_form", r.closed_form},
                      {"failure", r.failure}});
    }
    fam["rows"] = std::move(rows);
    if (!f.in_domain) fam["note"] = "hypersurfaces in P^2 are curves; outside the modeled range";
    out.push_back(std::move(fam));
  }
  return out;
}

std::string to_markdown(const std::vector<BundleFamily>& families) {
  std::ostringstream os;
  for (const auto& f : families) {
    os << "## n = " << f.n << "\n\n";
    if (!f.in_domain) {
      os << "hypersurfaces in P^2 are curves; outside the modeled range\n\n";
      continue;
    }
    os << "| d | a | Fano | ch2 verdict | machinery | closed form | failure |\n|---|---|---|---|---|---|---|\n";
    for (const auto& r : f.rows) {
      os << "| " << r.d << " | " << r.a << " | " << (r.fano ? "yes" : "no") << " | " << verdict_text(r.verdict)
         << " | " << (r.machinery ? "yes" : "no") << " | " << (r.closed_form ? "yes" : "no") << " | " << r.failure
         << " |\n";
    }
    os << "\nagreement: " << (f.agree ? "yes" : "no") << "\n\n";
  }
  return os.str();
}

}  // namespace chpos::cli
