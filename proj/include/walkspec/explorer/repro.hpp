#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "walkspec/explorer/json_io.hpp"
#include "walkspec/numeric.hpp"
#include "walkspec/spectral.hpp"

namespace walkspec {

/// K_{a,b} with even q = 2k and odd r.
struct KabRow {
  int a = 0, b = 0, k = 0, r = 0;
  BigInt w_2k;
  BigInt w_2k_closed;   // 2 a^k b^k
  BigInt w_2k_r;
  BigInt w_2k_r_closed; // (a + b) (ab)^{k + (r-1)/2}
  Rational ratio;         // w_{2k+r} / w_{2k}
  Rational ratio_closed;  // (a + b)/2 (ab)^{(r-1)/2}
  /// (a+b)/2 (ab)^{(r-1)/2} > (ab)^{r/2}, decided on squares.
  bool closed_strict = false;
  CertifiedInterval mu_r;
  /// ratio > mu^r confirmed by the certified interval.
  bool exceeds_mu_r = false;

  bool ok() const;
};

struct K2t2tRow {
  int t = 0;
  BigInt w2, w4;
  Rational ratio;  // w_4 / w_2
  CertifiedInterval mu_sq;
  double gap = 0.0;  // ratio - mu^2
  bool strict = false;

  bool ok() const { return strict; }
};

/// One reading of the K_{4n,4n,n} weight vector.
struct K4nRow {
  int n = 0;
  std::string normalization;  // "norm_one" or "sum_one"
  std::vector<double> weights;  // one value per part class: first 8n, last n
  double form = 0.0;            // x^T A x
  double sum_sq = 0.0;          // (sum x)^2
  double ratio = 0.0;           // form / (sum x)^2
  Rational ratio_exact;         // the same ratio, exactly
  Rational cap;                 // (omega - 1) / omega
  std::vector<double> part_sums;
  bool ms_equality = false;     // sum-one form equals the cap
  bool wilf_equality = false;   // form equals cap * (sum x)^2
};

struct K4nPerron {
  int n = 0;
  double mu = 0.0;
  double wilf_rhs = 0.0;  // cap * (sum of the unit Perron vector)^2
  bool wilf_equality = false;
};

struct ReproReport {
  std::string id;
  std::vector<KabRow> kab;
  std::vector<K2t2tRow> k2t2t;
  std::vector<K4nRow> k4n;
  std::vector<K4nPerron> k4n_perron;
  std::vector<std::string> findings;

  /// All asserted checks passed; findings never fail a report.
  bool ok() const;
};

std::vector<std::string_view> repro_ids();
/// Throws Error on an unknown id.
ReproReport repro(std::string_view id);

json_io::Json to_json(const ReproReport& report);
std::string render_text(const ReproReport& report);

}  // namespace walkspec
