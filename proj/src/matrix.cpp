#include "immpoly/matrix.hpp"

#include <stdexcept>

namespace immpoly {

ExactMatrix::ExactMatrix(int n) : n_(n)
{
    if (n < 1) throw std::invalid_argument("matrix order must be positive");
    a_.assign(static_cast<size_t>(n) * n, Rational(0));
}

ExactMatrix ExactMatrix::identity(int n)
{
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::plus_scaled_identity(const Rational& c) const
{
    ExactMatrix r = *this;
    for (int i = 0; i < n_; ++i) r.at(i, i) += c;
    return r;
}

ExactMatrix ExactMatrix::scaled_identity_minus(const Rational& x) const
{
    ExactMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            r.at(i, j) = (i == j) ? Rational(x - at(i, j)) : Rational(-at(i, j));
    return r;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<int>& rows,
                                   const std::vector<int>& cols) const
{
    if (rows.empty() || rows.size() != cols.size())
        throw std::invalid_argument("submatrix needs equal nonempty index sets");
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 0 || rows[i] >= n_ || cols[i] < 0 || cols[i] >= n_)
            throw std::invalid_argument("submatrix index out of range");
        if (i > 0 && (rows[i] <= rows[i - 1] || cols[i] <= cols[i - 1]))
            throw std::invalid_argument("submatrix index sets must be ascending");
    }
    ExactMatrix r(static_cast<int>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return r;
}

std::pair<Rational, Rational> MatrixSpec::coefficients() const
{
    switch (kind) {
        case Kind::D: return {1, 0};
        case Kind::A: return {0, 1};
        case Kind::L: return {1, -1};
        case Kind::Q: return {1, 1};
        case Kind::Aalpha: return {alpha, Rational(1) - alpha};
        case Kind::LinComb: return {beta, gamma};
    }
    throw std::logic_error("unreachable");
}

MatrixSpec MatrixSpec::parse(const std::string& s)
{
    MatrixSpec spec;
    if (s == "D") { spec.kind = Kind::D; return spec; }
    if (s == "A") { spec.kind = Kind::A; return spec; }
    if (s == "L") { spec.kind = Kind::L; return spec; }
    if (s == "Q") { spec.kind = Kind::Q; return spec; }
    if (s.rfind("aalpha:", 0) == 0) {
        spec.kind = Kind::Aalpha;
        spec.alpha = parse_rational(s.substr(7));
        return spec;
    }
    if (s.rfind("lincomb:", 0) == 0) {
        const std::string args = s.substr(8);
        const size_t comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("lincomb needs beta,gamma: " + s);
        spec.kind = Kind::LinComb;
        spec.beta = parse_rational(args.substr(0, comma));
        spec.gamma = parse_rational(args.substr(comma + 1));
        return spec;
    }
    throw std::invalid_argument("unknown matrix spec: " + s);
}

std::string MatrixSpec::to_string() const
{
    switch (kind) {
        case Kind::D: return "D";
        case Kind::A: return "A";
        case Kind::L: return "L";
        case Kind::Q: return "Q";
        case Kind::Aalpha: return "aalpha:" + immpoly::to_string(alpha);
        case Kind::LinComb:
            return "lincomb:" + immpoly::to_string(beta) + "," +
                   immpoly::to_string(gamma);
    }
    throw std::logic_error("unreachable");
}

ExactMatrix degree_matrix(const Graph& g)
{
    ExactMatrix m(g.n());
    for (int v = 0; v < g.n(); ++v) m.at(v, v) = g.degree(v);
    return m;
}

ExactMatrix adjacency_matrix(const Graph& g)
{
    ExactMatrix m(g.n());
    for (const auto& [u, v] : g.edges()) {
        m.at(u, v) = 1;
        m.at(v, u) = 1;
    }
    return m;
}

ExactMatrix lincomb_matrix(const Graph& g, const Rational& beta,
                           const Rational& gamma)
{
    ExactMatrix m(g.n());
    for (int v = 0; v < g.n(); ++v) m.at(v, v) = beta * g.degree(v);
    for (const auto& [u, v] : g.edges()) {
        m.at(u, v) = gamma;
        m.at(v, u) = gamma;
    }
    return m;
}

ExactMatrix graph_matrix(const Graph& g, const MatrixSpec& spec)
{
    const auto [beta, gamma] = spec.coefficients();
    return lincomb_matrix(g, beta, gamma);
}

}  // namespace immpoly
