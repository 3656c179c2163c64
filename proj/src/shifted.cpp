#include "spinrep/shifted.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "spinrep/fraction.hpp"

namespace spinrep {

namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("partition: bad part '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("partition: bad part '" + tok + "'");
        parts.push_back(v);
        pos = next + 1;
    }
    return parts;
}

std::string join_parts(const std::vector<int>& parts) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) { return Partition(parse_parts(text)); }

bool Partition::is_strict() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] == parts_[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty()) return Partition{};
    conj.resize(parts_[0], 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++conj[c];
    return Partition(conj);
}

std::string Partition::str() const { return join_parts(parts_); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("strict partition: parts must be positive");
        if (i > 0 && parts_[i - 1] <= parts_[i])
            throw std::invalid_argument("strict partition: parts must strictly decrease");
        n_ += parts_[i];
    }
}

StrictPartition StrictPartition::parse(const std::string& text) {
    return StrictPartition(parse_parts(text));
}

std::string StrictPartition::str() const { return join_parts(parts_); }

std::vector<StrictPartition> enumerate_strict_partitions(int n) {
    std::vector<StrictPartition> out;
    if (n <= 0) return out;
    std::vector<int> cur;
    // depth-first with parts tried largest first yields decreasing lex order
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<int> ShiftedTableau::reading_word() const {
    std::vector<int> w;
    for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
    return w;
}

std::vector<ShiftedTableau> standard_shifted_tableaux(const StrictPartition& shape) {
    const int n = shape.n();
    const int nrows = shape.length();
    std::vector<ShiftedTableau> out;
    std::vector<int> lens(nrows, 0);
    std::vector<std::vector<int>> rows(nrows);

    // Grow one cell at a time; every prefix of a standard filling is itself a
    // shifted diagram of a strict partition, and conversely.
    auto grow = [&](auto&& self, int k) -> void {
        if (k > n) {
            ShiftedTableau t;
            t.shape = shape;
            t.rows = rows;
            out.push_back(std::move(t));
            return;
        }
        for (int r = 0; r < nrows; ++r) {
            if (lens[r] >= shape.part(r)) continue;
            if (r > 0 && lens[r - 1] <= lens[r] + 1) continue;
            ++lens[r];
            rows[r].push_back(k);
            self(self, k + 1);
            rows[r].pop_back();
            --lens[r];
        }
    };
    grow(grow, 1);

    std::sort(out.begin(), out.end(), [](const ShiftedTableau& a, const ShiftedTableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

ContentVector content_vector(const ShiftedTableau& t) {
    ContentVector cv(t.shape.n(), 0);
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (size_t c = 0; c < t.rows[r].size(); ++c)
            cv[t.rows[r][c] - 1] = static_cast<int>(c);  // content of cell (r+1, r+1+c)
    return cv;
}

std::vector<ContentVector> scont(const StrictPartition& shape) {
    std::vector<ContentVector> out;
    for (const auto& t : standard_shifted_tableaux(shape)) out.push_back(content_vector(t));
    return out;
}

std::vector<ContentVector> scont(int n, const StrictPartition& shape) {
    if (n != shape.n())
        throw std::invalid_argument("scont: n does not match the size of the shape");
    return scont(shape);
}

long long schur_count(const StrictPartition& shape) {
    const int n = shape.n();
    Fraction f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    for (int p : shape.parts())
        for (int k = 2; k <= p; ++k) f /= k;
    const auto& parts = shape.parts();
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            f *= Fraction(parts[i] - parts[j], parts[i] + parts[j]);
    return f.as_int();
}

namespace {

// Replays the growth chain of a content vector: entry content c attaches to
// the unique row whose current length is c, or starts a new row when c = 0.
// Returns the row lengths, or empty on failure.
std::vector<int> replay_growth(const ContentVector& v) {
    std::vector<int> lens;
    for (int c : v) {
        if (c < 0) return {};
        if (c == 0) {
            // new row; valid only if the previous row is already longer than 1
            if (!lens.empty() && lens.back() < 2) return {};
            lens.push_back(1);
            continue;
        }
        int hit = -1;
        for (size_t r = 0; r < lens.size(); ++r) {
            if (lens[r] == c) {
                hit = static_cast<int>(r);
                break;
            }
        }
        if (hit < 0) return {};
        if (hit > 0 && lens[hit - 1] <= lens[hit] + 1) return {};
        ++lens[hit];
    }
    return lens;
}

}  // namespace

bool is_content_vector(const ContentVector& v) {
    return !v.empty() && !replay_growth(v).empty();
}

StrictPartition shape_of(const ContentVector& v) {
    auto lens = replay_growth(v);
    if (v.empty() || lens.empty())
        throw std::invalid_argument("shape_of: not a shifted content vector");
    return StrictPartition(lens);
}

std::vector<Partition> gp_reduction(const Partition& lambda) {
    std::vector<Partition> out;
    const auto conj = lambda.conjugate().parts();
    auto conj_at = [&](int a) { return a >= 1 && a <= (int)conj.size() ? conj[a - 1] : 0; };
    for (int i = 1; i <= lambda.length(); ++i) {
        int a = -1;
        for (int cand = 1; cand <= (int)conj.size(); ++cand) {
            if (conj_at(cand) >= i && i > conj_at(cand + 1)) {
                a = cand;
                break;
            }
        }
        if (a < 0) throw std::logic_error("gp_reduction: no column satisfies the cut condition");
        // remove the bottom box of column a: shorten row conj_at(a)
        std::vector<int> parts = lambda.parts();
        --parts[conj_at(a) - 1];
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        out.emplace_back(parts);
    }
    return out;
}

long long row_moment(const Partition& lambda) {
    long long s = 0;
    const auto& parts = lambda.parts();
    for (size_t i = 0; i < parts.size(); ++i) s += static_cast<long long>(i) * parts[i];
    return s;
}

int qres_exponent(const StrictPartition& lambda, int i) {
    if (i < 1 || i > lambda.length())
        throw std::out_of_range("qres_exponent: row index out of range");
    const auto reduced = gp_reduction(lambda.as_partition());
    const long long d = row_moment(lambda.as_partition()) - row_moment(reduced[i - 1]);
    return static_cast<int>((i - 1) + d);
}

}  // namespace spinrep
