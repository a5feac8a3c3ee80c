#include "hbgrowth/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hbg {

namespace detail {

SCCReport scc_of_pattern(const std::vector<bool>& positive, int dim) {
  // Iterative Tarjan. Components complete in reverse topological order of
  // the condensation, so the collected list is reversed before returning.
  std::vector<std::vector<int>> adj(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (positive[static_cast<size_t>(i) * dim + j]) adj[i].push_back(j);
    }
  }
  std::vector<int> index(dim, -1), low(dim, 0), edge_pos(dim, 0);
  std::vector<bool> on_stack(dim, false);
  std::vector<int> stack, call;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  for (int root = 0; root < dim; ++root) {
    if (index[root] != -1) continue;
    call.push_back(root);
    while (!call.empty()) {
      int v = call.back();
      if (index[v] == -1) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (edge_pos[v] < static_cast<int>(adj[v].size())) {
        int w = adj[v][edge_pos[v]++];
        if (index[w] == -1) {
          call.push_back(w);
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
    }
  }
  std::reverse(comps.begin(), comps.end());
  return SCCReport{std::move(comps)};
}

PFResult pf_irreducible_double(const std::vector<double>& entries, int dim, double tol,
                               int max_iter) {
  // Collatz-Wielandt iteration on A = M + I: v stays strictly positive,
  // the ratio bounds min_i (Av)_i/v_i and max_i (Av)_i/v_i both converge
  // to lambda(A) = lambda(M) + 1 because A is primitive.
  auto at = [&](int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; };
  std::vector<double> v(dim, 1.0), w(dim, 0.0);
  PFResult out;
  for (int it = 1; it <= max_iter; ++it) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double maxw = 0.0;
    for (int i = 0; i < dim; ++i) {
      double acc = v[i];  // the +I term
      for (int j = 0; j < dim; ++j) acc += at(i, j) * v[j];
      w[i] = acc;
      const double ratio = acc / v[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      maxw = std::max(maxw, acc);
    }
    for (int i = 0; i < dim; ++i) v[i] = w[i] / maxw;
    if (hi - lo <= tol) {
      out.lambda = 0.5 * (hi + lo) - 1.0;
      out.vector = v;
      out.iterations = it;
      double res = 0.0;
      for (int i = 0; i < dim; ++i) {
        double acc = 0.0;
        for (int j = 0; j < dim; ++j) acc += at(i, j) * v[j];
        res = std::max(res, std::abs(acc - out.lambda * v[i]));
      }
      out.residual = res;
      return out;
    }
    if (it == max_iter) {
      throw Error("pf_eigen: no convergence after " + std::to_string(max_iter) +
                  " iterations (residual bound " + std::to_string(hi - lo) + ")");
    }
  }
  throw Error("pf_eigen: iteration cap must be positive");
}

double spectral_radius_double(const std::vector<double>& entries, int dim, double tol,
                              int max_iter) {
  std::vector<bool> positive(entries.size());
  for (size_t k = 0; k < entries.size(); ++k) positive[k] = entries[k] > 0.0;
  const SCCReport scc = scc_of_pattern(positive, dim);
  double best = 0.0;
  for (const auto& comp : scc.components) {
    const int n = static_cast<int>(comp.size());
    std::vector<double> block(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        block[static_cast<size_t>(i) * n + j] =
            entries[static_cast<size_t>(comp[i]) * dim + comp[j]];
      }
    }
    best = std::max(best, pf_irreducible_double(block, n, tol, max_iter).lambda);
  }
  return best;
}

}  // namespace detail

bool is_irreducible(const NonNegMatrix& m) {
  if (m.dim < 1) throw Error("is_irreducible: dimension must be at least 1");
  return scc_decomposition(m).irreducible();
}

SCCReport scc_decomposition(const NonNegMatrix& m) {
  std::vector<bool> positive(m.entries.size());
  for (size_t k = 0; k < m.entries.size(); ++k) positive[k] = m.entries[k] > 0;
  return detail::scc_of_pattern(positive, m.dim);
}

PFResult pf_eigen(const NonNegMatrix& m, double tol, int max_iter) {
  if (tol <= 0.0) throw Error("pf_eigen: tolerance must be positive");
  if (!is_irreducible(m)) {
    throw Error(
        "pf_eigen: matrix is reducible; use spectral_radius_reducible for the "
        "maximum block eigenvalue");
  }
  std::vector<double> entries(m.entries.begin(), m.entries.end());
  return detail::pf_irreducible_double(entries, m.dim, tol, max_iter);
}

double spectral_radius_reducible(const NonNegMatrix& m, double tol, int max_iter) {
  if (m.dim < 1) throw Error("spectral_radius_reducible: dimension must be at least 1");
  std::vector<double> entries(m.entries.begin(), m.entries.end());
  return detail::spectral_radius_double(entries, m.dim, tol, max_iter);
}

double spectral_radius_big(const BigMatrix& m, double tol, int max_iter) {
  std::vector<double> entries(m.entries.size());
  for (size_t k = 0; k < m.entries.size(); ++k) entries[k] = m.entries[k].to_double();
  return detail::spectral_radius_double(entries, m.dim, tol, max_iter);
}

std::string to_string(Subinvariance v) {
  switch (v) {
    case Subinvariance::le:
      return "le";
    case Subinvariance::lt:
      return "lt";
    case Subinvariance::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Subinvariance subinvariance_test(const NonNegMatrix& m, const std::vector<double>& v,
                                 double lambda, double slack) {
  if (static_cast<int>(v.size()) != m.dim) throw Error("subinvariance_test: dimension mismatch");
  bool any_positive = false;
  for (double x : v) {
    if (x < 0.0) throw Error("subinvariance_test: vector must be nonnegative");
    if (x > 0.0) any_positive = true;
  }
  if (!any_positive) throw Error("subinvariance_test: vector must be nonzero");
  if (!is_irreducible(m)) throw Error("subinvariance_test: matrix must be irreducible");
  bool strict = false;
  for (int i = 0; i < m.dim; ++i) {
    double acc = 0.0;
    for (int j = 0; j < m.dim; ++j) acc += static_cast<double>(m.at(i, j)) * v[j];
    const double bound = lambda * v[i];
    if (acc > bound + slack) return Subinvariance::inconclusive;
    if (acc < bound - slack) strict = true;
  }
  return strict ? Subinvariance::lt : Subinvariance::le;
}

}  // namespace hbg
