#include "orthospin/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>

#include "orthospin/errors.hpp"

namespace orthospin {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw DomainError("partition part is negative");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (int p : parts_) size_ += p;
}

int Partition::column(std::size_t i) const noexcept {
    int c = 0;
    for (int p : parts_) {
        if (static_cast<std::size_t>(p) > i) ++c;
        else break;
    }
    return c;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
}

Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw DomainError("partition text must look like [a,b,...]");
    text = trim(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto tok = trim(text.substr(0, comma));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw DomainError("bad partition part: " + std::string(tok));
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int v : p.parts()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (parts_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // remaining mass must fit in the remaining parts
        if (static_cast<long>(p) * parts_left < remaining) break;
        cur.push_back(p);
        partitions_rec(remaining - p, p, parts_left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int max_parts) {
    std::vector<Partition> out;
    if (n < 0 || max_parts < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n, max_parts, cur, out);
    return out;
}

std::vector<Partition> enumerate_even_partitions(int m, int max_parts) {
    if (m % 2 != 0) throw DomainError("even partitions need an even size");
    std::vector<Partition> out;
    for (const auto& half : enumerate_partitions(m / 2, max_parts)) {
        std::vector<int> parts = half.parts();
        for (int& v : parts) v *= 2;
        out.emplace_back(std::move(parts));
    }
    return out;
}

int content_sum(const Partition& p) {
    int c = 0;
    for (int i = 0; i < p.length(); ++i) {
        int len = p[i];
        c += len * (len - 1) / 2 - i * len;
    }
    return c;
}

Partition transpose(const Partition& p) {
    std::vector<int> cols;
    if (!p.empty()) {
        cols.reserve(p[0]);
        for (int j = 0; j < p[0]; ++j) cols.push_back(p.column(j));
    }
    return Partition(std::move(cols));
}

bool fits_orthogonal(const Partition& p, int theta) {
    return p.column(0) + p.column(1) <= theta;
}

Partition column_flip(const Partition& p, int theta) {
    if (!fits_orthogonal(p, theta))
        throw DomainError("column_flip needs first two columns of total length at most theta: " +
                          p.to_string());
    std::vector<int> cols = transpose(p).parts();
    if (cols.empty()) cols.push_back(0);
    cols[0] = theta - cols[0];
    if (cols[0] == 0) cols.clear();
    return transpose(Partition(std::move(cols)));
}

std::vector<LambdaRhoPair> enumerate_lambda_rho(int n, int theta) {
    std::vector<LambdaRhoPair> out;
    if (n < 0 || theta < 1) return out;
    const auto rhos = enumerate_partitions(n, theta);
    for (int k = 0; 2 * k <= n; ++k) {
        for (const auto& lambda : enumerate_partitions(n - 2 * k, theta)) {
            if (!fits_orthogonal(lambda, theta)) continue;
            for (const auto& rho : rhos) out.push_back({lambda, k, rho});
        }
    }
    return out;
}

bool is_contained(const Partition& inner, const Partition& outer) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

}  // namespace orthospin
