#include "walkspec/explorer/repro.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "walkspec/clique.hpp"
#include "walkspec/families.hpp"
#include "walkspec/walks.hpp"

namespace walkspec {

namespace {

BigInt ipow(const BigInt& base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

Rational exact_of(double x) { return Rational(x); }

std::vector<KabRow> run_kab() {
  const std::pair<int, int> sizes[] = {{1, 2}, {2, 3}, {3, 5}};
  std::vector<KabRow> rows;
  for (const auto& [a, b] : sizes) {
    const Graph g = complete_multipartite({a, b});
    const CertifiedInterval mu = spectral_radius_certified(g);
    for (int k : {1, 2}) {
      for (int r : {1, 3}) {
        const WalkTable w(g, 2 * k + r);
        const BigInt ab = BigInt(a) * b;
        KabRow row;
        row.a = a;
        row.b = b;
        row.k = k;
        row.r = r;
        row.w_2k = w.total(2 * k);
        row.w_2k_closed = 2 * ipow(ab, k);
        row.w_2k_r = w.total(2 * k + r);
        row.w_2k_r_closed = BigInt(a + b) * ipow(ab, k + (r - 1) / 2);
        row.ratio = make_rational(row.w_2k_r, row.w_2k);
        row.ratio_closed = Rational(BigInt(a + b) * ipow(ab, (r - 1) / 2), BigInt(2));
        row.ratio_closed.canonicalize();
        row.closed_strict = row.ratio_closed * row.ratio_closed > Rational(ipow(ab, r));
        row.mu_r = mu.power(r);
        row.exceeds_mu_r = row.ratio > exact_of(row.mu_r.hi);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<K2t2tRow> run_k2t2t() {
  std::vector<K2t2tRow> rows;
  for (int t : {1, 2, 3}) {
    const Graph g = complete_multipartite({2 * t, 2 * t, t});
    const WalkTable w(g, 4);
    K2t2tRow row;
    row.t = t;
    row.w2 = w.total(2);
    row.w4 = w.total(4);
    row.ratio = make_rational(row.w4, row.w2);
    row.mu_sq = spectral_radius_certified(g).power(2);
    row.gap = to_double_nearest(row.ratio) - row.mu_sq.midpoint();
    row.strict = exact_of(row.mu_sq.hi) < row.ratio;
    rows.push_back(std::move(row));
  }
  return rows;
}

void run_k4n(ReproReport& rep) {
  for (int n : {1, 2}) {
    const Graph g = complete_multipartite({4 * n, 4 * n, n});
    const int omega = clique_number(g).omega;
    const Rational cap = ms_cap(omega);
    const double cap_d = to_double_nearest(cap);
    const int size = 9 * n;

    // The stated vector is proportional to 1 on the two large parts and 2 on
    // the small one, so its ratio is computed exactly from those weights.
    std::vector<Rational> y(size, Rational(1));
    for (int i = 8 * n; i < size; ++i) y[i] = 2;
    const Rational ysum = std::accumulate(y.begin(), y.end(), Rational(0));
    const Rational ratio_exact = ms_quadratic_form_exact(g, y) / (ysum * ysum);

    const double big = 1.0 / std::sqrt(12.0 * n);
    const double small = 1.0 / std::sqrt(3.0 * n);
    std::vector<double> unit(size, big);
    for (int i = 8 * n; i < size; ++i) unit[i] = small;
    const double unit_sum = std::accumulate(unit.begin(), unit.end(), 0.0);

    for (const char* normalization : {"norm_one", "sum_one"}) {
      const bool sum_one = std::string_view(normalization) == "sum_one";
      std::vector<double> x = unit;
      if (sum_one)
        for (double& v : x) v /= unit_sum;
      K4nRow row;
      row.n = n;
      row.normalization = normalization;
      row.weights = {x.front(), x.back()};
      row.form = ms_quadratic_form(g, x);
      const double s = std::accumulate(x.begin(), x.end(), 0.0);
      row.sum_sq = s * s;
      row.ratio = row.form / row.sum_sq;
      row.ratio_exact = ratio_exact;
      row.cap = cap;
      row.part_sums = {4 * n * x.front(), 4 * n * x.front(), n * x.back()};
      row.wilf_equality = std::abs(row.form - cap_d * row.sum_sq) <= 1e-9 * std::max(1.0, row.form);
      row.ms_equality = sum_one && std::abs(row.form - cap_d) <= 1e-9;
      rep.k4n.push_back(std::move(row));
    }

    const Spectrum spec = eigen_decompose(g);
    const auto& u = spec.eigenvectors.front();
    const double usum = std::accumulate(u.begin(), u.end(), 0.0);
    K4nPerron perron;
    perron.n = n;
    perron.mu = spec.spectral_radius();
    perron.wilf_rhs = cap_d * usum * usum;
    perron.wilf_equality = std::abs(perron.mu - perron.wilf_rhs) <= 1e-8 * perron.mu;
    rep.k4n_perron.push_back(perron);

    std::ostringstream os;
    os << "K_{" << 4 * n << ',' << 4 * n << ',' << n << "}: the stated weights give form/(sum x)^2 = "
       << to_string(ratio_exact) << " against (omega-1)/omega = " << to_string(cap)
       << "; part sums of the sum-one rescaling are " << to_string(Rational(4 * n) / ysum) << ", "
       << to_string(Rational(4 * n) / ysum) << ", " << to_string(Rational(2 * n) / ysum)
       << ", so the Motzkin-Straus bound is "
       << (ratio_exact == cap ? "attained" : "not attained") << " by this vector";
    rep.findings.push_back(os.str());
    os.str("");
    os << std::setprecision(12) << "K_{" << 4 * n << ',' << 4 * n << ',' << n << "}: Perron vector gives mu = "
       << perron.mu << " and (omega-1)/omega (sum x)^2 = " << perron.wilf_rhs << "; Wilf equality "
       << (perron.wilf_equality ? "holds" : "does not hold");
    rep.findings.push_back(os.str());
  }
}

}  // namespace

bool KabRow::ok() const {
  return w_2k == w_2k_closed && w_2k_r == w_2k_r_closed && ratio == ratio_closed && closed_strict && exceeds_mu_r;
}

bool ReproReport::ok() const {
  for (const auto& row : kab)
    if (!row.ok()) return false;
  for (const auto& row : k2t2t)
    if (!row.ok()) return false;
  return true;
}

std::vector<std::string_view> repro_ids() { return {"kab_even_q", "k2t2t", "k4n4n_n"}; }

ReproReport repro(std::string_view id) {
  ReproReport rep;
  rep.id = std::string(id);
  if (id == "kab_even_q") {
    rep.kab = run_kab();
  } else if (id == "k2t2t") {
    rep.k2t2t = run_k2t2t();
  } else if (id == "k4n4n_n") {
    run_k4n(rep);
  } else {
    throw Error("unknown repro id '" + std::string(id) + "' (expected kab_even_q, k2t2t or k4n4n_n)");
  }
  return rep;
}

json_io::Json to_json(const ReproReport& report) {
  using json_io::Json;
  using json_io::rational;
  Json j;
  j["id"] = report.id;
  if (!report.kab.empty()) {
    Json rows = Json::array();
    for (const auto& r : report.kab) {
      rows.push_back(Json{{"a", r.a},
                          {"b", r.b},
                          {"k", r.k},
                          {"q", 2 * r.k},
                          {"r", r.r},
                          {"w_2k", r.w_2k.get_str()},
                          {"w_2k_closed", r.w_2k_closed.get_str()},
                          {"w_2k_r", r.w_2k_r.get_str()},
                          {"w_2k_r_closed", r.w_2k_r_closed.get_str()},
                          {"ratio", rational(r.ratio)},
                          {"ratio_closed", rational(r.ratio_closed)},
                          {"closed_strict", r.closed_strict},
                          {"mu_r", json_io::interval(r.mu_r)},
                          {"exceeds_mu_r", r.exceeds_mu_r},
                          {"ok", r.ok()}});
    }
    j["kab"] = rows;
  }
  if (!report.k2t2t.empty()) {
    Json rows = Json::array();
    for (const auto& r : report.k2t2t) {
      rows.push_back(Json{{"t", r.t},
                          {"w2", r.w2.get_str()},
                          {"w4", r.w4.get_str()},
                          {"ratio", rational(r.ratio)},
                          {"mu_squared", json_io::interval(r.mu_sq)},
                          {"gap", r.gap},
                          {"strict", r.strict}});
    }
    j["k2t2t"] = rows;
  }
  if (!report.k4n.empty()) {
    Json rows = Json::array();
    for (const auto& r : report.k4n) {
      rows.push_back(Json{{"n", r.n},
                          {"normalization", r.normalization},
                          {"weights", r.weights},
                          {"form", r.form},
                          {"sum_squared", r.sum_sq},
                          {"ratio", r.ratio},
                          {"ratio_exact", rational(r.ratio_exact)},
                          {"cap", rational(r.cap)},
                          {"part_sums", r.part_sums},
                          {"ms_equality", r.ms_equality},
                          {"wilf_equality", r.wilf_equality}});
    }
    j["k4n4n_n"] = rows;
    Json perron = Json::array();
    for (const auto& p : report.k4n_perron) {
      perron.push_back(Json{{"n", p.n}, {"mu", p.mu}, {"wilf_rhs", p.wilf_rhs}, {"wilf_equality", p.wilf_equality}});
    }
    j["perron"] = perron;
  }
  j["findings"] = report.findings;
  j["ok"] = report.ok();
  return j;
}

std::string render_text(const ReproReport& report) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << "repro " << report.id << '\n';
  for (const auto& r : report.kab) {
    os << "  K_{" << r.a << ',' << r.b << "} q=" << 2 * r.k << " r=" << r.r << ": w_q=" << r.w_2k << " (closed "
       << r.w_2k_closed << ") w_{q+r}/w_q=" << to_string(r.ratio) << " (closed " << to_string(r.ratio_closed)
       << ") mu^r<=" << r.mu_r.hi << (r.ok() ? "  ok" : "  FAILED") << '\n';
  }
  for (const auto& r : report.k2t2t) {
    os << "  K_{" << 2 * r.t << ',' << 2 * r.t << ',' << r.t << "}: w_4/w_2=" << to_string(r.ratio) << " mu^2 in ["
       << r.mu_sq.lo << ", " << r.mu_sq.hi << "] gap " << r.gap << (r.strict ? "  strict" : "  NOT strict") << '\n';
  }
  for (const auto& r : report.k4n) {
    os << "  K_{" << 4 * r.n << ',' << 4 * r.n << ',' << r.n << "} " << r.normalization << ": form " << r.form
       << " (sum x)^2 " << r.sum_sq << " ratio " << to_string(r.ratio_exact) << " cap " << to_string(r.cap)
       << " part sums";
    for (double s : r.part_sums) os << ' ' << s;
    os << '\n';
  }
  for (const auto& f : report.findings) os << "  finding: " << f << '\n';
  os << (report.ok() ? "ok\n" : "FAILED\n");
  return os.str();
}

}  // namespace walkspec
