#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <tuple>
#include <vector>

#include <Eigen/Core>

namespace toricslope {

template <int K>
using CubatureVector = Eigen::Matrix<double, K, 1>;

struct Rect {
  double x0, x1, y0, y1;
};

struct CubatureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;  ///< per-component absolute floor on the target error
  std::size_t max_evaluations = 100'000'000;
  int initial_panels = 8;  ///< per axis
};

template <int K>
struct CubatureResult {
  CubatureVector<K> value = CubatureVector<K>::Zero();
  CubatureVector<K> error = CubatureVector<K>::Zero();
  std::size_t evaluations = 0;
  std::size_t panels = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
struct GaussKronrod15 {
  std::array<double, 15> nodes;
  std::array<double, 15> kronrod_weights;
  std::array<double, 15> gauss_weights;  ///< zero at Kronrod-only nodes

  GaussKronrod15() {
    constexpr std::array<double, 8> xgk{
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.0};
    constexpr std::array<double, 8> wgk{
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    constexpr std::array<double, 4> wg{
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
    for (int k = 0; k < 8; ++k) {
      const double g = (k % 2 == 1) ? wg[static_cast<std::size_t>(k / 2)] : 0.0;
      nodes[static_cast<std::size_t>(k)] = -xgk[static_cast<std::size_t>(k)];
      nodes[static_cast<std::size_t>(14 - k)] = xgk[static_cast<std::size_t>(k)];
      kronrod_weights[static_cast<std::size_t>(k)] = kronrod_weights[static_cast<std::size_t>(14 - k)] =
          wgk[static_cast<std::size_t>(k)];
      gauss_weights[static_cast<std::size_t>(k)] = gauss_weights[static_cast<std::size_t>(14 - k)] = g;
    }
  }
};

inline const GaussKronrod15& gk15() {
  static const GaussKronrod15 rule;
  return rule;
}

template <int K>
struct Panel {
  Rect rect;
  CubatureVector<K> value;
  CubatureVector<K> error;
  double priority = 0.0;
};

template <int K>
bool panel_less(const Panel<K>& a, const Panel<K>& b) {
  return std::tie(a.priority, a.rect.x0, a.rect.y0, a.rect.x1) <
         std::tie(b.priority, b.rect.x0, b.rect.y0, b.rect.x1);
}

template <int K, typename F>
Panel<K> evaluate_panel(F& f, const Rect& rect) {
  const auto& rule = gk15();
  const double cx = 0.5 * (rect.x0 + rect.x1);
  const double hx = 0.5 * (rect.x1 - rect.x0);
  const double cy = 0.5 * (rect.y0 + rect.y1);
  const double hy = 0.5 * (rect.y1 - rect.y0);
  CubatureVector<K> kronrod = CubatureVector<K>::Zero();
  CubatureVector<K> gauss = CubatureVector<K>::Zero();
  for (std::size_t a = 0; a < 15; ++a) {
    const double x = cx + hx * rule.nodes[a];
    CubatureVector<K> row_k = CubatureVector<K>::Zero();
    CubatureVector<K> row_g = CubatureVector<K>::Zero();
    for (std::size_t b = 0; b < 15; ++b) {
      const CubatureVector<K> v = f(x, cy + hy * rule.nodes[b]);
      row_k += rule.kronrod_weights[b] * v;
      row_g += rule.gauss_weights[b] * v;
    }
    kronrod += rule.kronrod_weights[a] * row_k;
    gauss += rule.gauss_weights[a] * row_g;
  }
  const double jac = hx * hy;
  Panel<K> panel{rect, jac * kronrod, (jac * (kronrod - gauss)).cwiseAbs(), 0.0};
  return panel;
}

}  // namespace detail

/// Globally adaptive tensor-product Gauss-Kronrod (7/15) cubature of a
/// vector-valued integrand over a rectangle.
///
/// The panel with the largest scaled error estimate |K15 - G7| is bisected in
/// both directions until every component meets
/// error <= max(abs_tol, rel_tol * |value|) or the evaluation budget runs out.
/// Results are deterministic: ties in the work queue are broken by panel
/// position and final sums run over panels in canonical order.
template <int K, typename F>
CubatureResult<K> adaptive_cubature(F&& f, const Rect& domain, const CubatureOptions& options) {
  using detail::Panel;
  constexpr std::size_t kEvalsPerPanel = 225;

  CubatureResult<K> result;
  std::vector<Panel<K>> heap;
  const int n = std::max(1, options.initial_panels);
  const double dx = (domain.x1 - domain.x0) / n;
  const double dy = (domain.y1 - domain.y0) / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rect r{domain.x0 + i * dx, i + 1 == n ? domain.x1 : domain.x0 + (i + 1) * dx, domain.y0 + j * dy,
                   j + 1 == n ? domain.y1 : domain.y0 + (j + 1) * dy};
      heap.push_back(detail::evaluate_panel<K>(f, r));
      result.evaluations += kEvalsPerPanel;
    }
  }

  auto totals = [&heap]() {
    std::vector<const Panel<K>*> order;
    order.reserve(heap.size());
    for (const auto& p : heap) order.push_back(&p);
    std::sort(order.begin(), order.end(), [](const Panel<K>* a, const Panel<K>* b) {
      return std::tie(a->rect.x0, a->rect.y0) < std::tie(b->rect.x0, b->rect.y0);
    });
    CubatureVector<K> value = CubatureVector<K>::Zero();
    CubatureVector<K> error = CubatureVector<K>::Zero();
    for (const auto* p : order) {
      value += p->value;
      error += p->error;
    }
    return std::make_pair(value, error);
  };

  auto [value, error] = totals();
  CubatureVector<K> scale;
  for (int k = 0; k < K; ++k) {
    scale[k] = std::max({std::abs(value[k]), options.rel_tol > 0 ? options.abs_tol / options.rel_tol : 0.0,
                         std::numeric_limits<double>::min()});
  }
  auto priority = [&scale](const Panel<K>& p) { return (p.error.array() / scale.array()).maxCoeff(); };
  for (auto& p : heap) p.priority = priority(p);
  std::make_heap(heap.begin(), heap.end(), detail::panel_less<K>);

  auto met = [&](const CubatureVector<K>& v, const CubatureVector<K>& e) {
    for (int k = 0; k < K; ++k) {
      if (e[k] > std::max(options.abs_tol, options.rel_tol * std::abs(v[k]))) return false;
    }
    return true;
  };

  std::size_t splits_since_refresh = 0;
  while (true) {
    if (met(value, error)) {
      std::tie(value, error) = totals();
      if (met(value, error)) {
        result.converged = true;
        break;
      }
    }
    if (result.evaluations + 4 * kEvalsPerPanel > options.max_evaluations) break;

    std::pop_heap(heap.begin(), heap.end(), detail::panel_less<K>);
    const Panel<K> worst = heap.back();
    heap.pop_back();
    const Rect& r = worst.rect;
    const double mx = 0.5 * (r.x0 + r.x1);
    const double my = 0.5 * (r.y0 + r.y1);
    const std::array<Rect, 4> children{Rect{r.x0, mx, r.y0, my}, Rect{mx, r.x1, r.y0, my},
                                       Rect{r.x0, mx, my, r.y1}, Rect{mx, r.x1, my, r.y1}};
    value -= worst.value;
    error -= worst.error;
    for (const auto& c : children) {
      Panel<K> child = detail::evaluate_panel<K>(f, c);
      child.priority = priority(child);
      value += child.value;
      error += child.error;
      heap.push_back(std::move(child));
      std::push_heap(heap.begin(), heap.end(), detail::panel_less<K>);
      result.evaluations += kEvalsPerPanel;
    }
    if (++splits_since_refresh == 1024) {
      std::tie(value, error) = totals();
      splits_since_refresh = 0;
    }
  }

  std::tie(result.value, result.error) = totals();
  result.panels = heap.size();
  return result;
}

}  // namespace toricslope
