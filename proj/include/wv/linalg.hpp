#ifndef WV_LINALG_HPP
#define WV_LINALG_HPP

#include <optional>
#include <vector>

#include "wv/rational.hpp"

namespace wv {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major, rows need equal length

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<size_t> rref(RatMat& a);

// Basis of { x : A x = 0 }.
std::vector<RatVec> nullspace(const RatMat& a, size_t ncols);

// A particular solution of A x = b (free variables set to 0), or nullopt if
// the system is inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

// True iff v lies in the row span of basis.
bool in_span(const std::vector<RatVec>& basis, const RatVec& v);

}  // namespace wv

#endif
