#include "immpoly/graph6.hpp"

#include <fstream>
#include <stdexcept>

namespace immpoly {

namespace {

int decode_char(char c)
{
    const int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126)
        throw std::invalid_argument("graph6: character out of range");
    return v - 63;
}

}  // namespace

Graph parse_graph6(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("graph6: empty string");

    size_t pos = 0;
    long n = 0;
    if (s[0] != '~') {
        n = decode_char(s[0]);
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~')
            throw std::invalid_argument("graph6: order beyond supported range");
        if (s.size() < 4)
            throw std::invalid_argument("graph6: malformed length header");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_char(s[i]);
        if (n <= 62)
            throw std::invalid_argument("graph6: non-canonical length header");
        pos = 4;
    }
    if (n < 1) throw std::invalid_argument("graph6: order must be positive");

    const long bits = n * (n - 1) / 2;
    const size_t body = static_cast<size_t>((bits + 5) / 6);
    if (s.size() - pos != body)
        throw std::invalid_argument("graph6: body length mismatch");

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (size_t i = pos; i < s.size(); ++i) {
        const int v = decode_char(s[i]);
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (v >> b) & 1;
            if (bit >= bits) {
                if (set)
                    throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                // Recover (i,j) with i < j from the column-major bit index.
                long t = bit;
                int col = 1;
                while (t >= col) {
                    t -= col;
                    ++col;
                }
                edges.emplace_back(static_cast<int>(t), col);
            }
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string emit_graph6(const Graph& g)
{
    const long n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: order beyond supported range");
    }

    const long bits = n * (n - 1) / 2;
    int acc = 0, filled = 0;
    long bit = 0;
    int col = 1, row = 0;
    for (; bit < bits; ++bit) {
        acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
        if (++filled == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            filled = 0;
        }
        if (++row == col) {
            row = 0;
            ++col;
        }
    }
    if (filled > 0) {
        acc <<= (6 - filled);
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

std::vector<std::string> read_graph6_lines(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph6 file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind(">>graph6<<", 0) == 0) {
            line = line.substr(10);
            if (line.empty()) continue;
        }
        lines.push_back(line);
    }
    return lines;
}

}  // namespace immpoly
