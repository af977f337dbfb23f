#pragma once

#include <string>
#include <vector>

#include "immpoly/graph.hpp"
#include "immpoly/rational.hpp"

namespace immpoly {

// Dense square matrix of exact rationals.
class ExactMatrix {
public:
    explicit ExactMatrix(int n);  // zero matrix; n >= 1
    static ExactMatrix identity(int n);

    int order() const { return n_; }
    Rational& at(int i, int j) { return a_[idx(i, j)]; }
    const Rational& at(int i, int j) const { return a_[idx(i, j)]; }

    ExactMatrix plus_scaled_identity(const Rational& c) const;  // M + cI
    ExactMatrix scaled_identity_minus(const Rational& x) const;  // xI - M

    // Rows and columns are index sets taken in ascending order.
    ExactMatrix submatrix(const std::vector<int>& rows,
                          const std::vector<int>& cols) const;

    bool operator==(const ExactMatrix&) const = default;

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }
    int n_;
    std::vector<Rational> a_;
};

// The graph matrices this library works with are linear combinations
// beta*D(G) + gamma*A(G) of the degree and adjacency matrices.  Named kinds
// fix (beta, gamma):
//   D       (1, 0)
//   A       (0, 1)
//   L       (1, -1)   (diagonal degree matrix minus adjacency)
//   Q       (1, 1)
//   aalpha  (alpha, 1-alpha)
//   lincomb (beta, gamma) explicitly
struct MatrixSpec {
    enum class Kind { D, A, L, Q, Aalpha, LinComb } kind = Kind::L;
    Rational alpha = 0;  // Aalpha only
    Rational beta = 0, gamma = 0;  // LinComb only

    // Resulting (beta, gamma) pair.
    std::pair<Rational, Rational> coefficients() const;

    // "D", "A", "L", "Q", "aalpha:1/3", "lincomb:2,3".
    static MatrixSpec parse(const std::string& s);
    std::string to_string() const;
};

ExactMatrix degree_matrix(const Graph& g);
ExactMatrix adjacency_matrix(const Graph& g);
ExactMatrix lincomb_matrix(const Graph& g, const Rational& beta,
                           const Rational& gamma);
ExactMatrix graph_matrix(const Graph& g, const MatrixSpec& spec);

}  // namespace immpoly
