#pragma once

// Matrix query language over adjacency matrices: parsing, shape and fragment
// checking, evaluation.
//
// Concrete syntax
//   A, X, ...        matrix variable (n x n)
//   ones             all-ones column (n x 1)
//   e1 * e2, e1 e2   matrix product
//   e1 + e2          sum
//   e'               transpose
//   e^k              k-fold product (sugar, expands to products)
//   diag(e)          diagonal matrix of a column vector
//   tr(e)            trace
//   had(e1, e2)      element-wise product, also written e1 .* e2
//   c * e            scalar multiple by a numeric literal
//   f:NAME(e)        element-wise function, NAME in {exp, square, reciprocal, rsqrt, binom3}

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gnnbench/graph.hpp"
#include "gnnbench/matrix.hpp"

namespace gnnbench::matlang {

enum class Op { var, matmul, add, transpose, diag, trace, ones, hadamard, scalar_mul, pointwise };

enum class PointwiseFn { exp, square, reciprocal, rsqrt, binom3 };

std::string_view op_name(Op op);
std::string_view pointwise_name(PointwiseFn fn);
/// Throws std::invalid_argument for names outside the registry.
PointwiseFn pointwise_from_name(std::string_view name);
double apply_pointwise(PointwiseFn fn, double x);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    Op op = Op::ones;
    std::string name;                    // var
    double scalar = 0.0;                 // scalar_mul
    PointwiseFn fn = PointwiseFn::exp;   // pointwise
    std::vector<ExprPtr> args;
    std::size_t position = 0;            // source offset, 0 for built nodes
};

ExprPtr var(std::string name);
ExprPtr ones();
ExprPtr matmul(ExprPtr lhs, ExprPtr rhs);
ExprPtr add(ExprPtr lhs, ExprPtr rhs);
ExprPtr transpose(ExprPtr e);
ExprPtr diag(ExprPtr e);
ExprPtr trace(ExprPtr e);
ExprPtr hadamard(ExprPtr lhs, ExprPtr rhs);
ExprPtr scalar_mul(double c, ExprPtr e);
ExprPtr pointwise(PointwiseFn fn, ExprPtr e);

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ExprPtr parse(std::string_view text);
/// Renders an expression in the concrete syntax; parse(to_string(e)) rebuilds e.
std::string to_string(const Expr& e);

struct Shape {
    std::size_t rows = 0;
    std::size_t cols = 0;
    bool is_sentence() const { return rows == 1 && cols == 1; }
    bool operator==(const Shape&) const = default;
};

/// Shape of the root for ambient size n; every variable is n x n.
Shape shape_check(const Expr& e, std::size_t n);

enum class Fragment { L1, L2, L3 };

struct OpSet {
    Fragment base = Fragment::L1;
    bool enriched = false;  // adds +, scalar multiplication and element-wise functions
};

bool op_allowed(Op op, const OpSet& ops);
bool fragment_check(const Expr& e, const OpSet& ops);
/// Smallest fragment containing e (enriched if e needs +, scalar multiples or functions).
OpSet minimal_fragment(const Expr& e);

using Binding = std::map<std::string, Matrix, std::less<>>;

/// Evaluates e. All bound matrices must be n x n with the same n.
Matrix eval(const Expr& e, const Binding& binding);
/// Same, with the ambient size given explicitly (for expressions without variables).
Matrix eval(const Expr& e, const Binding& binding, std::size_t n);

/// Evaluates a sentence with every variable bound to the graph's adjacency.
double eval_sentence(const Expr& e, const Graph& g);
bool sentence_distinguishes(const Expr& e, const Graph& g, const Graph& h, double tol);

/// Enumerates distinct sentences built from the operators of `ops` (one
/// variable A plus ones) whose syntax trees have depth at most max_depth.
/// Deterministic order, truncated at `cap`.
std::vector<ExprPtr> enumerate_sentences(const OpSet& ops, unsigned max_depth, std::size_t cap);

}  // namespace gnnbench::matlang
