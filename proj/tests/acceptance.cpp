// Acceptance run: one line per criterion. Exit status is nonzero when a
// criterion fails in a way not covered by the documented exception list.

#include "chpos/chern.hpp"
#include "chpos/cones.hpp"
#include "chpos/errors.hpp"
#include "chpos/schubert.hpp"
#include "chpos/slopes.hpp"
#include "chpos/spec_text.hpp"
#include "cli.hpp"
#include "report.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace chpos;

namespace {

SpaceSpec P(int n) { return SpaceSpec{ProjectiveSpaceSpec{n}}; }

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  // A failure whose cause is understood and recorded; does not fail the run.
  bool documented = false;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome criterion1() {
  Outcome o;
  int checked = 0;
  for (int n = 2; n <= 10; ++n) {
    const auto pn = projective_space(n);
    const auto ch = ch_tangent(*pn);
    for (int k = 1; k <= n; ++k) {
      ++checked;
      if (ch.ch(k) != Rational(n + 1) / factorial(k) * power(*pn->hyperplane, k)) {
        o.fail("ch_" + std::to_string(k) + " of P(" + std::to_string(n) + ") differs");
      }
      if (classify(ch.ch(k), *pn).level != Level::ample) {
        o.fail("ch_" + std::to_string(k) + " of P(" + std::to_string(n) + ") not ample");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " classes";
  return o;
}

Outcome criterion2() {
  Outcome o;
  int checked = 0;
  for (int n = 3; n <= 12; ++n) {
    for (int r = 1; r <= 3 && n - r >= 2; ++r) {
      std::vector<int> d(r, 1);
      while (true) {
        ++checked;
        const auto ci = complete_intersection(P(n), d);
        const auto ch2 = ch_tangent(*ci).ch(2);
        int s2 = 0;
        for (int x : d) s2 += x * x;
        const std::string name = render(*ci->spec);
        if (ch2 != Rational(n + 1 - s2, 2) * power(*ci->hyperplane, 2)) o.fail("ch2 formula fails on " + name);
        const auto v = classify(ch2, *ci);
        if ((v.level >= Level::positive) != (s2 < n + 1)) o.fail("positivity mismatch on " + name);
        if ((v.level >= Level::nef) != (s2 <= n + 1)) o.fail("nef mismatch on " + name);
        if (v.provenance != Provenance::candidate ||
            v.describe().find("(relative to declared cone)") == std::string::npos) {
          o.fail("candidate flag missing on " + name);
        }
        int pos = r - 1;
        while (pos >= 0 && d[pos] == 4) --pos;
        if (pos < 0) break;
        ++d[pos];
        for (int j = pos + 1; j < r; ++j) d[j] = d[pos];
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " complete intersections";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int k = 2; k <= 4; ++k) {
    const auto g = grassmannian(k, 2 * k + 1);
    const auto v = classify(ch_tangent(*g).ch(2), *g);
    if (v.level != Level::positive || v.ample != AmpleStatus::no) {
      o.fail("G(" + std::to_string(k) + "," + std::to_string(2 * k + 1) + "): " + v.describe());
    }
    const auto half = cli::describe(SpaceSpec{GrassmannianSpec{k, 2 * k}});
    const bool noted = std::any_of(half.notes.begin(), half.notes.end(),
                                   [](const std::string& s) { return s.rfind("discrepancy", 0) == 0; });
    if (!noted) o.fail("G(k,2k) report lacks the discrepancy note for k=" + std::to_string(k));
  }
  if (o.pass) o.detail = "G(k,2k+1), k=2..4 positive and not ample; G(k,2k) annotated";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::vector<SpaceSpec> bases;
  for (int n = 1; n <= 6; ++n) bases.push_back(P(n));
  for (int n = 3; n <= 6; ++n)
    for (int d = 1; d <= 3; ++d) bases.push_back(SpaceSpec{CompleteIntersectionSpec{make_spec(P(n)), {d}}});
  int checked = 0;
  for (const auto& base : bases) {
    for (int a = 0; a <= 6; ++a) {
      ++checked;
      const auto pb = projective_bundle(base, {-a, 0});
      const auto& bd = std::get<BundleData>(pb->data);
      const auto e = chern_from_ch(ch_split(*bd.base, bd.normalized_twists));
      const auto closed = ch2_pbundle_rank2(ch_tangent(*bd.base).ch(2), e);
      if (ch_tangent(*pb).ch(2) != (*bd.pullback)(closed)) o.fail("mismatch on " + render(*pb->spec));
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " rank-two bundles";
  return o;
}

// (d, a) range, written out with a floating square root and an exact fix-up.
bool family_member(int n, int d, int a) {
  if (d < 1 || d > (n * n + n + 1) / (2 * n)) return false;
  const int need = std::max(0, d * d - n - 1);
  int lo = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(need))));
  while (lo > 0 && (lo - 1) * (lo - 1) >= need) --lo;
  while (lo * lo < need) ++lo;
  return lo <= a && a <= n - d;
}

Outcome criterion5() {
  Outcome o;
  int members = 0;
  for (const auto& fam : cli::search_pbundle(8, 4)) {
    if (!fam.in_domain) continue;
    for (const auto& row : fam.rows) {
      const bool certified = row.fano && row.verdict.level >= Level::nef;
      const std::string at = "n=" + std::to_string(row.n) + " d=" + std::to_string(row.d) +
                             " a=" + std::to_string(row.a);
      if (certified != family_member(row.n, row.d, row.a)) o.fail("set mismatch at " + at);
      if (certified) ++members;
      if (certified && row.a > 0) {
        if (row.verdict.level != Level::nef || !row.verdict.witness || row.verdict.witness->pairing != 0) {
          o.fail("member " + at + " is " + row.verdict.describe());
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(members) + " members for n=3..8 (n=2 outside the hypersurface range)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const auto prod = product(P(m), P(n));
      const auto& pd = std::get<ProductData>(prod->data);
      const auto ch2 = ch_tangent(*prod).ch(2);
      const std::string name = render(*prod->spec);
      if (ch2 != (*pd.pull_left)(ch_tangent(*pd.left).ch(2)) + (*pd.pull_right)(ch_tangent(*pd.right).ch(2))) {
        o.fail("pullback sum fails on " + name);
      }
      const auto v = classify(ch2, *prod);
      if (v.level != Level::nef || !v.witness || v.witness->pairing != 0 ||
          v.witness->label.find('x') == std::string::npos) {
        o.fail(name + ": " + v.describe());
      }
    }
  }
  if (o.pass) o.detail = "16 products, witnesses of product type";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<std::string> nef_instances;
  bool other = false;
  for (int n = 2; n <= 6; ++n) {
    for (int m = 0; m <= n - 2; ++m) {
      const auto bl = blowup_linear(n, m);
      const std::string name = render(*bl->spec);
      const bool fano = is_fano(*bl).holds;
      if (fano != bup_fano_criterion(n, m) || !fano) {
        o.fail(name + ": Fano test and criterion disagree or fail");
        other = true;
      }
      if (is_nef(ch_tangent(*bl).ch(2), bl->cones.at(2)).holds) {
        nef_instances.push_back(name);
        if (m != 0) other = true;
      }
    }
  }
  if (!nef_instances.empty()) {
    std::string list;
    for (const auto& s : nef_instances) list += (list.empty() ? "" : ", ") + s;
    o.fail("ch2 is nef on " + list);
    // Point centres: ch2 = (n+1)/2 (H^2 + E^2) with H*E = 0, nef by hand.
    o.documented = !other && nef_instances.size() == 5;
    if (o.documented) o.detail += "; every m >= 1 instance is not nef and all are Fano";
  }
  if (o.pass) o.detail = "all instances Fano with ch2 not nef";
  return o;
}

Outcome criterion8() {
  Outcome o;
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto base = projective_space(n);
    for (int r = 3; r <= 4; ++r) {
      std::vector<int> w(r, -3);
      // Models depend only on the sorted, max-normalized twists.
      std::map<std::vector<int>, ModelPtr> cache;
      while (true) {
        ++checked;
        std::vector<int> key = w;
        std::sort(key.begin(), key.end(), std::greater<>());
        const int top = key.front();
        for (auto& x : key) x -= top;
        auto& pb = cache[key];
        if (!pb) pb = projective_bundle(P(n), key);
        const auto ch2 = ch_tangent(*pb).ch(2);
        const auto wit = slopes::prop_ch2P_witness(*base, w);
        const bool constant = std::all_of(w.begin(), w.end(), [&](int x) { return x == w.front(); });
        std::ostringstream at;
        at << "P(" << n << ") twists";
        for (int x : w) at << ' ' << x;
        if (constant) {
          const auto v = classify(ch2, *pb);
          if (v.describe() != "nef, not weakly positive") o.fail(at.str() + ": " + v.describe());
        } else {
          const auto key_wit = slopes::prop_ch2P_witness(*base, key);
          const auto surface = slopes::ch2P_surface(*pb, key_wit);
          const auto& cone = pb->cones.at(2);
          const bool declared = std::find(cone.generators.begin(), cone.generators.end(), surface) != cone.generators.end();
          if (wit.value >= 0) o.fail(at.str() + ": witness value " + to_string(wit.value));
          if (key_wit.value != wit.value) o.fail(at.str() + ": witness depends on order");
          if (!declared) o.fail(at.str() + ": witness surface is not declared");
          if (pair(ch2, surface) >= 0 || is_nef(ch2, cone).holds) o.fail(at.str() + ": ch2 passes is_nef");
        }
        int pos = r - 1;
        while (pos >= 0 && w[pos] == 3) --pos;
        if (pos < 0) break;
        ++w[pos];
        for (int j = pos + 1; j < r; ++j) w[j] = -3;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " twist vectors";
  return o;
}

Outcome criterion9() {
  using namespace slopes;
  Outcome o;
  oracle::Gen g(2024);
  // Pullback invariance, chain, epsilon inequality, ampleness.
  for (int t = 0; t < 2000; ++t) {
    const SplitCurveBundle e(g.longs(g.int_in(1, 5), -5, 5));
    const long m = g.long_in(1, 6);
    const auto f = e.pullback(m);
    if (mu_cover({m}, f.degree(), f.rank()) != mu(e)) o.fail("pullback changes the slope");
    for (int k = 1; k <= e.rank(); ++k)
      if (mu_k_split(f, k) / m != mu_k_split(e, k)) o.fail("pullback changes mu^k");
    const auto chain = chain_check(e);
    if (e.rank() > 1 && (chain.front() == mu(e)) != is_semistable_split(e)) o.fail("chain equality");
    if (!thm_epsilon_check(e).holds) o.fail("epsilon inequality");
    const bool a1 = is_ample_split(e);
    const bool a2 = *std::min_element(e.degrees().begin(), e.degrees().end()) > 0;
    const long r = e.rank();
    const bool a3 = (r == 1 ? Rational(e.degree()) : Rational(e.degree()) - (r - 1) * mu_k_split(e, r - 1)) > 0;
    if (a1 != a2 || a1 != a3) o.fail("ampleness routes disagree");
  }
  // mu_k against the cover oracle, rank <= 4, |d| <= 3.
  for (int t = 0; t < 150; ++t) {
    const auto d = g.longs(g.int_in(1, 4), -3, 3);
    for (int k = 1; k <= static_cast<int>(d.size()); ++k) {
      if (mu_k_split(SplitCurveBundle(d), k) != oracle::mu_k_bruteforce(d, k, 2)) o.fail("mu_k oracle");
    }
  }
  for (int t = 0; t < 1000; ++t) {
    const SplitCurveBundle e(g.longs(g.int_in(1, 5), -6, 6));
    const auto cert = epsilon_quotient_schedule(e, g.positive_rational(3, 40));
    if (!cert.satisfied(mu(e)) || cert.slopes.front() != mu(e)) o.fail("schedule certificate");
  }
  int traces = 0;
  for (int r = 1; r <= 5; ++r) {
    std::vector<long> d(r - 1, 1);
    while (true) {
      for (long deg = 1; deg <= 4; ++deg) {
        ++traces;
        const auto t = zhang_slope_trace(r, deg, d);
        Integer prod = 1;
        for (long x : d) prod *= x;
        if (t.cover_degree != prod || t.line_degree != prod * deg || !t.slope_matches) o.fail("Zhang trace");
      }
      int pos = r - 2;
      while (pos >= 0 && d[pos] == 4) --pos;
      if (pos < 0) break;
      ++d[pos];
      for (int j = pos + 1; j < r - 1; ++j) d[j] = 1;
    }
  }
  if (o.pass) o.detail = "2000 bundles, 1000 schedules, " + std::to_string(traces) + " traces";
  return o;
}

Outcome criterion10() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"describe", "P(4)"},
      {"describe", "G(2,5)"},
      {"describe", "PB(P(2); O(-2), O(0))"},
      {"describe", "Prod(P(2), P(1))"},
      {"describe", "Bl(P(4); L(1))"},
      {"describe", "CI(WP(1,1,1,2); 4)"},
      {"search", "ci"},
      {"search", "pbundle"},
      {"slopes", "mu", "4", "3"},
      {"slopes", "mu-cover", "2", "4", "3"},
      {"slopes", "muk", "3,1,0", "2"},
      {"slopes", "chain", "3,1,0"},
      {"slopes", "ample", "1,2"},
      {"slopes", "semistable", "2,2"},
      {"slopes", "thm-epsilon", "3,1,0"},
      {"slopes", "schedule", "3,1,0", "1/10"},
      {"slopes", "zhang", "3", "5", "2,3"},
      {"slopes", "witness", "P(2)", "1,0,0"},
  };
  int runs = 0;
  for (const auto& cmd : commands) {
    for (const char* format : {"md", "json"}) {
      std::string reference;
      bool first = true;
      for (const char* jobs : {"1", "1", "2", "5", "16"}) {
        std::vector<std::string> args{"--format", format, "--jobs", jobs};
        args.insert(args.end(), cmd.begin(), cmd.end());
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        ++runs;
        if (code != 0) o.fail(cmd.front() + " exited " + std::to_string(code) + ": " + err.str());
        if (first) {
          reference = out.str();
          first = false;
        } else if (out.str() != reference) {
          o.fail("output of '" + cmd.front() + " " + cmd.back() + "' changed across runs");
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " runs byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8,
                                                          criterion9, criterion10};
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.documented = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 60) {
      o.fail("took " + std::to_string(secs) + "s");
      o.documented = false;
    }
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail;
    if (!o.pass && o.documented) line << " [documented exception]";
    line << " (" << secs << "s)";
    std::cout << line.str() << std::endl;
    if (!o.pass && !o.documented) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
