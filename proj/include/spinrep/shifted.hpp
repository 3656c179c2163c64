#pragma once

#include <string>
#include <vector>

namespace spinrep {

/// Weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;  // empty partition of 0
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text);  // comma separated, e.g. "2,2"

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool is_strict() const;

    Partition conjugate() const;

    std::string str() const;  // "3,1"; empty partition renders as ""

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Strictly decreasing sequence of positive parts; the label of every
/// supermodule in this project.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    static StrictPartition parse(const std::string& text);  // e.g. "3,1"

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_.at(i); }

    Partition as_partition() const { return Partition(parts_); }
    std::string str() const;

    friend bool operator==(const StrictPartition& a, const StrictPartition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const StrictPartition& a, const StrictPartition& b) {
        return !(a == b);
    }
    friend bool operator<(const StrictPartition& a, const StrictPartition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All strict partitions of n in decreasing lexicographic order; empty for n=0.
std::vector<StrictPartition> enumerate_strict_partitions(int n);

/// Entry k of a content vector is the content (column minus row) of the cell
/// labelled k in a standard shifted tableau.
using ContentVector = std::vector<int>;

/// Standard filling of the shifted diagram of a strict partition. Row i
/// (0-based here) occupies cells (i+1, i+1) .. (i+1, i+lambda_i) in inclusive
/// matrix coordinates, so the leftmost cell of each row sits on the diagonal.
struct ShiftedTableau {
    StrictPartition shape;
    std::vector<std::vector<int>> rows;

    std::vector<int> reading_word() const;  // rows concatenated top to bottom
};

/// All standard shifted tableaux of the given shape, sorted lexicographically
/// by reading word.
std::vector<ShiftedTableau> standard_shifted_tableaux(const StrictPartition& shape);

ContentVector content_vector(const ShiftedTableau& t);

/// The shifted content vectors of shape lambda, in tableau enumeration order.
std::vector<ContentVector> scont(const StrictPartition& shape);
std::vector<ContentVector> scont(int n, const StrictPartition& shape);

/// Number of standard shifted tableaux, by the shifted hook length formula
/// n!/(l1!...lr!) * prod_{i<j} (li-lj)/(li+lj). Exact integer arithmetic.
long long schur_count(const StrictPartition& shape);

/// True iff `v` is the content vector of some standard shifted tableau.
bool is_content_vector(const ContentVector& v);

/// Recover the (unique) shape whose tableau has this content vector.
/// Throws std::invalid_argument if the vector is not realizable.
StrictPartition shape_of(const ContentVector& v);

/// The reduction rule on a general partition: for each i = 1..length, remove
/// one box from the bottom of column a_i, where conj(lambda)_{a_i} >= i >
/// conj(lambda)_{a_i+1}. For strict input this is exactly single-box removal
/// from row i.
std::vector<Partition> gp_reduction(const Partition& lambda);

/// n(lambda) = sum (i-1)*lambda_i over rows, 1-based i.
long long row_moment(const Partition& lambda);

/// (i-1) + n(lambda) - n(lambda^(i)); equals 2i-2 for strict lambda.
/// i is 1-based; throws std::out_of_range when i is not in 1..length.
int qres_exponent(const StrictPartition& lambda, int i);

}  // namespace spinrep
