#include "immpoly/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace immpoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::hook(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("hook(n,k) needs 1 <= k <= n");
    std::vector<int> p;
    p.push_back(k);
    p.insert(p.end(), n - k, 1);
    return Partition(std::move(p));
}

Partition Partition::single_row(int n)
{
    if (n < 0) throw std::invalid_argument("single_row needs n >= 0");
    return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::single_column(int n)
{
    if (n < 0) throw std::invalid_argument("single_column needs n >= 0");
    return Partition(std::vector<int>(n, 1));
}

int Partition::multiplicity(int l) const
{
    int c = 0;
    for (int p : parts_) c += (p == l);
    return c;
}

bool Partition::is_hook() const
{
    if (parts_.empty()) return false;
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] != 1) return false;
    return true;
}

Partition Partition::padded_with_ones(int extra) const
{
    if (extra < 0) throw std::invalid_argument("padding must be nonnegative");
    std::vector<int> p = parts_;
    p.insert(p.end(), extra, 1);
    return Partition(std::move(p));
}

Partition Partition::without_part(int i) const
{
    if (i < 0 || i >= num_parts())
        throw std::invalid_argument("part index out of range");
    std::vector<int> p = parts_;
    p.erase(p.begin() + i);
    return Partition(std::move(p));
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& cur,
                   std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0) throw std::invalid_argument("enumerate_partitions needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate_rec(n, n == 0 ? 1 : n, cur, out);
    return out;
}

long long partition_count(int n)
{
    if (n < 0) throw std::invalid_argument("partition_count needs n >= 0");
    // p(k) via Euler's pentagonal recurrence.
    std::vector<long long> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k) {
        long long acc = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2;
            int g2 = j * (3 * j + 1) / 2;
            if (g1 > k && g2 > k) break;
            long long sign = (j % 2 == 1) ? 1 : -1;
            if (g1 <= k) acc += sign * p[k - g1];
            if (g2 <= k) acc += sign * p[k - g2];
        }
        p[k] = acc;
    }
    return p[n];
}

CycleTypeCounts::CycleTypeCounts(const Partition& type)
    : n_(type.weight()), counts_(type.weight() + 1, 0)
{
    for (int p : type.parts()) counts_[p]++;
}

CycleTypeCounts::CycleTypeCounts(int n, std::vector<int> counts_by_length)
    : n_(n), counts_(std::move(counts_by_length))
{
    if (static_cast<int>(counts_.size()) != n + 1)
        throw std::invalid_argument("counts vector must have n+1 entries");
    int total = 0;
    for (int l = 1; l <= n; ++l) {
        if (counts_[l] < 0)
            throw std::invalid_argument("cycle counts must be nonnegative");
        total += l * counts_[l];
    }
    if (total != n)
        throw std::invalid_argument("cycle lengths must sum to the degree");
}

int CycleTypeCounts::count(int l) const
{
    if (l < 1 || l > n_) return 0;
    return counts_[l];
}

int CycleTypeCounts::max_length() const
{
    for (int l = n_; l >= 1; --l)
        if (counts_[l] > 0) return l;
    return 0;
}

Partition CycleTypeCounts::to_partition() const
{
    std::vector<int> parts;
    for (int l = n_; l >= 1; --l)
        parts.insert(parts.end(), counts_[l], l);
    return Partition(std::move(parts));
}

Partition parse_partition_spec(const std::string& spec, int n)
{
    if (spec.empty()) throw std::invalid_argument("empty partition spec");
    if (spec == "()") return Partition();
    if (spec.rfind("hook:", 0) == 0) {
        const std::string arg = spec.substr(5);
        size_t pos = 0;
        int k = 0;
        try {
            k = std::stoi(arg, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad hook spec: " + spec);
        }
        if (pos != arg.size())
            throw std::invalid_argument("bad hook spec: " + spec);
        return Partition::hook(n, k);
    }
    std::vector<int> parts;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition spec: " + spec);
        }
        if (pos != tok.size())
            throw std::invalid_argument("bad partition spec: " + spec);
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

}  // namespace immpoly
