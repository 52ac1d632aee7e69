#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "curalg/truncated_module.hpp"

namespace curalg {

// Raised when a module window cannot support the requested computation.
class WindowMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degree-zero g[t]-module maps M -> N (matrices N.dim x M.dim).
// With check_windows, truncated inputs whose windows do not determine the
// answer are rejected.
std::vector<SparseMatrix> hom_space(const TruncatedModule& m, const TruncatedModule& n, bool check_windows = true);
// Degree-zero g-module maps M -> N.
std::vector<SparseMatrix> g_hom_space(const TruncatedModule& m, const TruncatedModule& n);

// dim Hom(Delta(lambda, r), M) through the defining relations on M[r]_lambda.
std::size_t delta_hom_dim(const Weight& lambda, int r, const TruncatedModule& m);
std::vector<SparseVector> delta_hom_vectors(const Weight& lambda, int r, const TruncatedModule& m);

// A relative 1-cocycle c on t g[t] with values in Hom(D, N): c(x (x) t^k) is
// a degree-k map D -> N. It vanishes on g.
struct Cocycle {
  int max_degree = 0;
  std::vector<SparseMatrix> values;  // index (k-1) * dim g + x, matrices N.dim x D.dim
  const SparseMatrix& at(int x, int k, int dim_g) const {
    return values[static_cast<std::size_t>((k - 1) * dim_g + x)];
  }
};

struct ExtResult {
  std::size_t dimension = 0;
  std::shared_ptr<const TruncatedModule> source;  // Delta(lambda, r)
  std::vector<Cocycle> cocycles;                  // representatives of a basis
  std::size_t cocycle_space_dim = 0;
  std::size_t coboundary_dim = 0;
};

// Ext^1(D, N) for a finite module D (normally a local Weyl module) through
// relative Lie algebra cohomology H^1(g[t], g; Hom(D, N)) in degree zero.
ExtResult ext1(const std::shared_ptr<const TruncatedModule>& d, const TruncatedModule& n);
ExtResult ext1_from_delta(const Weight& lambda, int r, const TruncatedModule& n);

// Residual of the cocycle identities; zero iff c defines an extension.
bool is_cocycle(const TruncatedModule& d, const TruncatedModule& n, const Cocycle& c);

struct Extension {
  TruncatedModule module;     // basis: N first, then the copies of D
  SparseMatrix inclusion;     // N -> E
  SparseMatrix projection;    // E -> D^{d}
};

// 0 -> N -> E -> D^{d} -> 0 with the given cocycles; d = cocycles.size().
Extension realize_extension(const TruncatedModule& d, const TruncatedModule& n, const std::vector<Cocycle>& cocycles);

// True iff some g[t]-map D -> E composes with the projection to the i-th copy to the identity.
bool extension_splits(const Extension& e, const TruncatedModule& d, std::size_t copy = 0);

}  // namespace curalg
