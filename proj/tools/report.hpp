#pragma once

#include "chpos/cones.hpp"
#include "chpos/spaces.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chpos::cli {

struct Report {
  std::string spec;
  int dim = 0;
  std::optional<CycleClass> ch1;
  std::optional<CycleClass> ch2;
  PositivityVerdict verdict_ch1;
  PositivityVerdict verdict_ch2;
  bool fano = false;
  std::optional<Witness> fano_witness;
  Provenance provenance = Provenance::exact;
  std::vector<std::string> notes;
};

Report describe(const SpaceSpec& spec);

/// {label: "p/q"} with zero coefficients omitted.
nlohmann::json class_json(const CycleClass& c);
nlohmann::json verdict_json(const PositivityVerdict& v);
nlohmann::json to_json(const Report& r);
std::string to_markdown(const Report& r);

struct CiRow {
  int n;
  std::vector<int> degrees;
  int dim;
  std::string ch2;
  bool fano;
  PositivityVerdict verdict;
  bool linear_section;
};

/// Complete intersections in P^n, n <= n_max, r <= r_max, 1 <= d_i <= d_max,
/// dimension at least two, in canonical order.
std::vector<CiRow> search_ci(int n_max, int r_max, int d_max, int jobs);

struct BundleRow {
  int n;
  int d;
  int a;
  bool fano;
  PositivityVerdict verdict;
  bool machinery;    // Fano and ch_2 nef
  bool closed_form;  // the (d, a) range formula
  std::string failure;
};

struct BundleFamily {
  int n;
  bool in_domain;  // hypersurfaces of dimension >= 2
  std::vector<BundleRow> rows;
  bool agree;
};

/// P(O(-a) + O) over degree-d hypersurfaces of P^n for d in 1..n+1, a in 0..n+1.
std::vector<BundleFamily> search_pbundle(int n_max, int jobs);

bool closed_form_member(int n, int d, int a);

nlohmann::json to_json(const std::vector<CiRow>& rows);
std::string to_markdown(const std::vector<CiRow>& rows);
nlohmann::json to_json(const std::vector<BundleFamily>& families);
std::string to_markdown(const std::vector<BundleFamily>& families);

}  // namespace chpos::cli
