#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "krlab/common.hpp"

namespace krlab {

// A partition is a nondecreasing list of positive parts. Weight is the sum,
// length the part count. The empty partition (weight 0, length 0) is valid.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    long long weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;  // "1+2+6", "()" for empty

    static Partition parse(const std::string& comma_separated);

  private:
    std::vector<int> parts_;
    long long weight_ = 0;
};

enum class Variant {
    KR1,
    KR2,
    KR3,
    KR4,
    KR3_1,
    KRB1,
    KRB4_2,
    KRB1_1,
    KR5,
    KR6,
    KRC1_2,
    KRC2_2,
    KRC2_1,
    CONG1,
    CONG2,
    CONG3,
    CONG4,
    CONG5,
    CONG6,
};

enum class Family { Mod9, Mod12, Congruence };

// Static description of one enumerant. The two difference-condition
// families share a window test and differ in the residue class of close
// windows, the smallest admissible part, and an occurrence cap on one part.
struct VariantInfo {
    Variant id;
    const char* name;  // CLI alias: "kr1", "kr3-1", "krb4-2", ...
    Family family;
    int residue;        // close-window sum residue mod 3 (families only)
    int min_part;       // smallest admissible part (1 = unrestricted)
    int capped_part;    // part whose occurrence count is capped, 0 = none
    int cap;            // max occurrences of capped_part
    int modulus;        // congruence variants only
    std::vector<int> residues;
};

const VariantInfo& variant_info(Variant v);
const std::vector<VariantInfo>& all_variants();
std::optional<Variant> variant_from_name(const std::string& name);

// True iff p lies in the variant's partition family.
bool satisfies(Variant v, const Partition& p);

// Empty when p is a member; otherwise names the first violated condition
// (offending indices included).
std::string membership_failure(Variant v, const Partition& p);

// Exhaustive (n, m) -> count table. Entry (0,0) is always 1.
class CountTable {
  public:
    CountTable(std::string label, int max_n) : label_(std::move(label)), max_n_(max_n) {}

    void bump(int n, int m);
    long long at(int n, int m) const;
    long long total(int n) const;  // sum over m
    int max_n() const { return max_n_; }
    const std::string& label() const { return label_; }
    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

    std::string to_csv() const;
    std::string to_json() const;

  private:
    std::string label_;
    int max_n_;
    std::map<std::pair<int, int>, long long> entries_;
};

// Exhaustive enumeration of all family members with weight <= max_n.
// Deterministic; every intermediate prefix is itself a member, so one
// recursive sweep fills the whole table.
CountTable enumerate(Variant v, int max_n);

// Partitions into parts with residue (mod modulus) in `residues`.
CountTable enumerate_congruence(int modulus, const std::vector<int>& residues, int max_n);

// Visit every member of weight exactly n (used by round-trip sweeps and
// the brute-force oracles). Visit order is lexicographic.
void for_each_member(Variant v, int n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> members(Variant v, int n);

}  // namespace krlab
