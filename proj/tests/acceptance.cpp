// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "envelope.hpp"
#include "fixtures.hpp"
#include "toricslope/functional.hpp"
#include "toricslope/report.hpp"
#include "toricslope/slope.hpp"

using namespace toricslope;
using fixtures::Q;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] %2d. %s :: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

struct Config {
  std::string name;
  NewtonDiagram diagram;
  LatticePolygon polygon;
};

std::map<std::array<std::size_t, 4>, double> integrals_by_selection(const SlopeReport& report) {
  std::map<std::array<std::size_t, 4>, double> out;
  for (const auto& fc : report.per_face) {
    for (const auto& t : fc.terms) out[t.selection.indices] = t.integral.value;
  }
  return out;
}

void criterion_1() {
  bool ok = true;
  std::ostringstream detail;
  for (const char* qs : {"0", "1/4", "1/2", "3/4", "1"}) {
    const Rational q = Q(qs);
    const double mu = compute_slope(fixtures::projective_plane(q)).mu;
    const double want = to_double(q) / 3;
    const bool good = std::abs(mu - want) < 1e-8;
    ok = ok && good;
    detail << "q=" << qs << " mu=" << fmt(mu) << (good ? "" : " (want " + fmt(want) + ")") << "; ";
  }
  for (const char* qs : {"3/2", "2"}) {
    const Rational q = Q(qs);
    const double mu = compute_slope(fixtures::projective_plane(q)).mu;
    const double want = to_double(2 * (1 + q) / 3);
    const bool good = std::abs(mu - want) < 1e-12;
    ok = ok && good;
    detail << "q=" << qs << " mu=" << fmt(mu) << (good ? "" : " (want " + fmt(want) + ")") << "; ";
  }
  verdict(1, ok, "P2 family slope (q/3 for q<=1, 2(1+q)/3 for q>1)", detail.str());
}

void criterion_2() {
  const auto report = compute_slope(fixtures::projective_plane(Q("1/2")));
  bool ok = true;
  std::size_t count = 0;
  std::ostringstream detail;
  for (const auto& fc : report.per_face) {
    for (const auto& t : fc.terms) {
      ++count;
      ok = ok && rel_err(t.integral.value, 1.0 / 24) < 1e-10;
      detail << fmt(t.integral.value) << " ";
    }
  }
  verdict(2, ok && count == 3, "P2 face integrals equal 1/24 (rel 1e-10)", detail.str());
}

void criterion_3() {
  struct Sample {
    const char *q00, *q10, *q01, *q11;
  };
  bool ok = true;
  std::ostringstream detail;
  for (const auto& s : {Sample{"1", "1/4", "7/8", "0"}, Sample{"2", "3/4", "7/4", "1/4"}, Sample{"3", "1", "5/2", "0"}}) {
    const Rational q00 = Q(s.q00), q10 = Q(s.q10), q01 = Q(s.q01), q11 = Q(s.q11);
    const bool case1 = q10 + q01 - q00 - q11 > 0 && q10 <= q00 / 2;
    const double mu = compute_slope(fixtures::hirzebruch_diagram(q00, q10, 0, q01, q11)).mu;
    const double want = to_double(fixtures::hirzebruch_case1_mu(q00, q10, q01, q11));
    ok = ok && case1 && std::abs(mu - want) < 1e-8;
    detail << "(" << s.q00 << "," << s.q10 << ",0," << s.q01 << "," << s.q11 << ") mu=" << fmt(mu)
           << " want=" << fmt(want) << "; ";
  }
  verdict(3, ok, "Hirzebruch case 1 closed form (abs 1e-8)", detail.str());
}

void criterion_4() {
  const auto report = compute_slope(fixtures::hirzebruch_single_face());
  double m = 0.0;
  for (const auto& fc : report.per_face) {
    if (fc.face.member_indices.size() == 5) {
      for (const auto& t : fc.terms) m += t.weighted;
    }
  }
  const auto by = integrals_by_selection(report);
  const double s3pi = std::sqrt(3.0) * std::numbers::pi;
  const std::vector<std::pair<std::array<std::size_t, 4>, double>> named{
      {{0, 0, 1, 3}, 7 * (-9 + 2 * s3pi) / 648},
      {{0, 1, 1, 3}, (6 - s3pi) / 108},
      {{0, 1, 3, 3}, (9 - s3pi) / 324},
      {{0, 1, 1, 4}, (-9 + 2 * s3pi) / 648}};
  bool ok = rel_err(m, 3.0 / 8) < 1e-8 && std::abs(report.mu - 2.0 / 15) < 1e-8;
  std::ostringstream detail;
  detail << "m=" << fmt(m) << " mu=" << fmt(report.mu) << " integrals:";
  for (const auto& [key, want] : named) {
    const auto it = by.find(key);
    const bool good = it != by.end() && rel_err(it->second, want) < 1e-10;
    ok = ok && good;
    detail << " " << (it == by.end() ? std::string("missing") : fmt(it->second));
  }
  verdict(4, ok, "Hirzebruch single face: m = 3/8, closed-form integrals, mu = 2/15", detail.str());
}

void criterion_5() {
  const std::vector<ExponentPair> hz{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}};
  const std::vector<ExponentPair> p2{{0, 0}, {1, 0}, {0, 1}};
  const auto a = enumerate_selections(hz).size();
  const auto b = enumerate_selections(p2).size();
  verdict(5, a == 32 && b == 3, "selection census (32 and 3)",
          "Hirzebruch " + std::to_string(a) + ", P2 " + std::to_string(b));
}

struct OracleRun {
  OracleResult fit;
  std::vector<FunctionalSample> conservation;  // u = 0, 5, 10
  std::vector<FunctionalSample> identity;      // u = 2, 8
};

void criterion_6(const std::vector<Config>& configs, const std::vector<OracleRun>& runs) {
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t k = 0; k < configs.size(); ++k) {
    const double mu = compute_slope(configs[k].diagram).mu;
    const double fitted = runs[k].fit.f0_fit.slope;
    const bool good = rel_err(fitted, mu) < kAgreementTolerance;
    ok = ok && good;
    detail << configs[k].name << ": formula " << fmt(mu) << " oracle " << fmt(fitted) << " envelope "
           << fmt(envelope::slope(configs[k].diagram, configs[k].polygon)) << "; ";
  }
  verdict(6, ok, "formula vs oracle slope over u in {8..16} (rel 2e-2)", detail.str());
}

void criterion_7(const std::vector<Config>& configs, const std::vector<OracleRun>& runs) {
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t k = 0; k < configs.size(); ++k) {
    const double want = 2 * to_double(configs[k].diagram.mean_weight());
    const double s1 = runs[k].fit.mixed_fit[1].slope;
    const double s2 = runs[k].fit.mixed_fit[2].slope;
    const bool good1 = rel_err(s1, want) < 2e-2;
    const bool good2 = rel_err(s2, want) < 2e-2;
    ok = ok && good1 && good2;
    detail << configs[k].name << ": 2mean(q)=" << fmt(want) << " i=1 " << fmt(s1) << (good1 ? "" : "(x)") << " i=2 "
           << fmt(s2) << (good2 ? "" : "(x)") << "; ";
  }
  verdict(7, ok, "mixed-energy slopes i = 1, 2 equal 2 mean(q) (rel 2e-2)", detail.str());
}

void criterion_8(const std::vector<Config>& configs, const std::vector<OracleRun>& runs) {
  bool ok = true;
  double worst = 0.0;
  for (std::size_t k = 0; k < configs.size(); ++k) {
    const double half = to_double(configs[k].diagram.volume()) / 2;
    for (const auto& s : runs[k].conservation) {
      const double r = std::abs(s.half_volume_uu - half) / half;
      worst = std::max(worst, r);
      ok = ok && r < 1e-6;
    }
  }
  verdict(8, ok, "volume conservation at u in {0, 5, 10} (rel 1e-6)", "worst relative deficit " + fmt(worst));
}

void criterion_9(const std::vector<Config>& configs, const std::vector<OracleRun>& runs) {
  bool ok = true;
  double worst = 0.0;
  for (std::size_t k = 0; k < configs.size(); ++k) {
    for (const auto& s : runs[k].identity) {
      const double r = std::abs(s.f0 + s.j - s.mixed[2]);
      worst = std::max(worst, r);
      ok = ok && r < 1e-6;
    }
  }
  verdict(9, ok, "F0 + J = (1/V) int phi omega_0^2 at u in {2, 8} (abs 1e-6)", "worst residual " + fmt(worst));
}

void criterion_10() {
  auto pair_of = [](int code) { return ExponentPair(code % 4, (code / 4) % 4); };
  std::int64_t three_bad = 0, four_bad = 0, swap_bad = 0, four_checked = 0;
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      const ExponentPair i = pair_of(a), j = pair_of(b);
      swap_bad += symbol_ijkl(i, j, j, i) + symbol_ijkl(j, i, i, j) != 0;
      for (int c = 0; c < 16; ++c) {
        const ExponentPair k = pair_of(c);
        const auto six = symbol_ijkl(i, j, k, i) + symbol_ijkl(i, k, j, i) + symbol_ijkl(j, i, i, k) +
                         symbol_ijkl(k, i, i, j) + symbol_ijkl(j, i, k, i) + symbol_ijkl(k, i, j, i);
        three_bad += six != d3(i, j, k);
        for (int d = 0; d < 16; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          const std::array<ExponentPair, 4> v{i, j, k, pair_of(d)};
          std::array<int, 4> o{0, 1, 2, 3};
          std::int64_t total = 0;
          do {
            total += symbol_ijkl(v[o[0]], v[o[1]], v[o[2]], v[o[3]]);
          } while (std::next_permutation(o.begin(), o.end()));
          const auto ring = d3(v[0], v[1], v[2]) + d3(v[1], v[2], v[3]) + d3(v[2], v[3], v[0]) + d3(v[3], v[0], v[1]);
          four_bad += total != ring;
          ++four_checked;
        }
      }
    }
  }
  verdict(10, three_bad == 0 && four_bad == 0 && swap_bad == 0, "symbol identities exhaustive on {0..3}^8",
          "three-index mismatches " + std::to_string(three_bad) + ", four-index mismatches " +
              std::to_string(four_bad) + " of " + std::to_string(four_checked) + ", (ijji)+(jiij) failures " +
              std::to_string(swap_bad));
}

void criterion_11(const std::vector<Config>& configs) {
  bool ok = true;
  double worst = 0.0;
  for (const auto& c : configs) {
    const double mu = compute_slope(c.diagram).mu;
    for (const Rational& lambda : {Q("1/2"), Rational(2)}) {
      const double scaled = compute_slope(c.diagram.scaled(lambda)).mu;
      const double r = rel_err(scaled, to_double(lambda) * mu);
      worst = std::max(worst, r);
      ok = ok && r < 1e-7;
    }
  }
  verdict(11, ok, "homogeneity mu(lambda q) = lambda mu(q), lambda in {1/2, 2} (rel 1e-7)",
          "worst relative error " + fmt(worst));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();

  const std::vector<Config> configs{
      {"P2 q=1/2", fixtures::projective_plane(Q("1/2")), fixtures::triangle()},
      {"Hirzebruch case 1 (1,1/4,0,7/8,0)", fixtures::hirzebruch_case1(), fixtures::hirzebruch()},
      {"Hirzebruch single face (1,1/2,0,1/2,0)", fixtures::hirzebruch_single_face(), fixtures::hirzebruch()}};
  const std::vector<double> fit_grid{8, 10, 12, 14, 16};
  const std::vector<double> conservation_grid{0, 5, 10};
  const std::vector<double> identity_grid{2, 8};
  std::vector<OracleRun> runs;
  for (const auto& c : configs) {
    OracleRun r;
    r.fit = run_oracle(c.diagram, fit_grid);
    r.conservation = sample_functional(c.diagram, conservation_grid);
    r.identity = sample_functional(c.diagram, identity_grid);
    runs.push_back(std::move(r));
  }
  criterion_6(configs, runs);
  criterion_7(configs, runs);
  criterion_8(configs, runs);
  criterion_9(configs, runs);
  criterion_10();
  criterion_11(configs);

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
