#include "krlab/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace krlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw ArgumentError("partition part at index " + std::to_string(i) +
                                " is not positive");
        if (i > 0 && parts_[i] < parts_[i - 1])
            throw ArgumentError("partition parts not nondecreasing at index " +
                                std::to_string(i));
        weight_ = checked_add(weight_, parts_[i]);
    }
}

std::string Partition::str() const {
    if (parts_.empty()) return "()";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << "+";
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream is(s);
    size_t idx = 0;
    while (std::getline(is, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw ArgumentError("bad partition literal at index " + std::to_string(idx) +
                                ": '" + tok + "'");
        }
        ++idx;
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw ArgumentError("part at index " + std::to_string(i) + " must be >= 1");
        if (i > 0 && parts[i] < parts[i - 1])
            throw ArgumentError("parts must be nondecreasing; violation at index " +
                                std::to_string(i));
    }
    return Partition(std::move(parts));
}

namespace {

std::vector<VariantInfo> make_registry() {
    auto fam = [](Variant id, const char* name, Family f, int residue, int min_part,
                  int capped_part, int cap) {
        return VariantInfo{id, name, f, residue, min_part, capped_part, cap, 0, {}};
    };
    auto cong = [](Variant id, const char* name, int modulus, std::vector<int> rs) {
        return VariantInfo{id, name, Family::Congruence, 0, 1, 0, 0, modulus, std::move(rs)};
    };
    return {
        fam(Variant::KR1, "kr1", Family::Mod9, 0, 1, 0, 0),
        fam(Variant::KR2, "kr2", Family::Mod9, 0, 2, 0, 0),
        fam(Variant::KR3, "kr3", Family::Mod9, 0, 3, 0, 0),
        fam(Variant::KR4, "kr4", Family::Mod9, 2, 2, 0, 0),
        // The stated side condition of kr3-1 duplicates kr4's; the predicate
        // below is the one consistent with its base partitions and with the
        // shift krb4-2(n+2m, m) = kr3-1(n, m). Validated against the series
        // coefficients by the acceptance suite.
        fam(Variant::KR3_1, "kr3-1", Family::Mod9, 0, 3, 3, 1),
        fam(Variant::KRB1, "krb1", Family::Mod9, 1, 1, 0, 0),
        fam(Variant::KRB4_2, "krb4-2", Family::Mod9, 2, 1, 1, 1),
        fam(Variant::KRB1_1, "krb1-1", Family::Mod9, 1, 1, 2, 1),
        fam(Variant::KR5, "kr5", Family::Mod12, 1, 1, 1, 1),
        fam(Variant::KR6, "kr6", Family::Mod12, 2, 2, 2, 1),
        fam(Variant::KRC1_2, "krc1-2", Family::Mod12, 1, 1, 0, 0),
        fam(Variant::KRC2_2, "krc2-2", Family::Mod12, 2, 1, 0, 0),
        fam(Variant::KRC2_1, "krc2-1", Family::Mod12, 2, 1, 1, 1),
        cong(Variant::CONG1, "cong1", 9, {1, 3, 6, 8}),
        cong(Variant::CONG2, "cong2", 9, {2, 3, 6, 7}),
        cong(Variant::CONG3, "cong3", 9, {3, 4, 5, 6}),
        cong(Variant::CONG4, "cong4", 9, {2, 3, 5, 8}),
        cong(Variant::CONG5, "cong5", 12, {1, 3, 4, 6, 7, 10, 11}),
        cong(Variant::CONG6, "cong6", 12, {2, 3, 5, 6, 7, 8, 11}),
    };
}

const std::vector<VariantInfo>& registry() {
    static const std::vector<VariantInfo> r = make_registry();
    return r;
}

}  // namespace

const std::vector<VariantInfo>& all_variants() { return registry(); }

const VariantInfo& variant_info(Variant v) {
    for (const auto& info : registry())
        if (info.id == v) return info;
    throw ConfigError("unknown variant tag");
}

std::optional<Variant> variant_from_name(const std::string& name) {
    for (const auto& info : registry())
        if (name == info.name) return info.id;
    return std::nullopt;
}

std::string membership_failure(Variant v, const Partition& p) {
    const VariantInfo& info = variant_info(v);
    const auto& a = p.parts();
    const int m = p.length();
    std::ostringstream os;

    if (info.family == Family::Congruence) {
        for (int j = 0; j < m; ++j) {
            int r = a[j] % info.modulus;
            if (r == 0) r = info.modulus;
            // residue sets are given in [1, modulus]
            if (std::find(info.residues.begin(), info.residues.end(), r) ==
                info.residues.end()) {
                os << "part " << a[j] << " at index " << j << " has residue " << r
                   << " (mod " << info.modulus << ") outside the admitted set";
                return os.str();
            }
        }
        return "";
    }

    if (m > 0 && a[0] < info.min_part) {
        os << "smallest part " << a[0] << " is below the minimum " << info.min_part;
        return os.str();
    }
    if (info.capped_part > 0) {
        int occ = 0;
        for (int x : a)
            if (x == info.capped_part) ++occ;
        if (occ > info.cap) {
            os << "the part " << info.capped_part << " occurs " << occ << " times (at most "
               << info.cap << " allowed)";
            return os.str();
        }
    }

    if (info.family == Family::Mod9) {
        for (int j = 0; j + 2 < m; ++j)
            if (a[j + 2] - a[j] < 3) {
                os << "difference at distance two below 3 at indices " << j << ".." << j + 2
                   << " (" << a[j] << "," << a[j + 2] << ")";
                return os.str();
            }
        for (int j = 0; j + 1 < m; ++j)
            if (a[j + 1] - a[j] <= 1 && (a[j] + a[j + 1]) % 3 != info.residue) {
                os << "close pair " << a[j] << "+" << a[j + 1] << " at index " << j
                   << " has sum " << a[j] + a[j + 1] << " != " << info.residue << " (mod 3)";
                return os.str();
            }
        return "";
    }

    // Mod12: difference at least 3 at distance 3; close windows at distance
    // 2 constrain the sum of all three involved parts.
    for (int j = 0; j + 3 < m; ++j)
        if (a[j + 3] - a[j] < 3) {
            os << "difference at distance three below 3 at indices " << j << ".." << j + 3
               << " (" << a[j] << "," << a[j + 3] << ")";
            return os.str();
        }
    for (int j = 0; j + 2 < m; ++j)
        if (a[j + 2] - a[j] <= 1 && (a[j] + a[j + 1] + a[j + 2]) % 3 != info.residue) {
            os << "close triple " << a[j] << "+" << a[j + 1] << "+" << a[j + 2] << " at index "
               << j << " has sum " << a[j] + a[j + 1] + a[j + 2] << " != " << info.residue
               << " (mod 3)";
            return os.str();
        }
    return "";
}

bool satisfies(Variant v, const Partition& p) { return membership_failure(v, p).empty(); }

void CountTable::bump(int n, int m) {
    auto& e = entries_[{n, m}];
    e = checked_add(e, 1);
}

long long CountTable::at(int n, int m) const {
    auto it = entries_.find({n, m});
    return it == entries_.end() ? 0 : it->second;
}

long long CountTable::total(int n) const {
    long long t = 0;
    auto it = entries_.lower_bound({n, 0});
    for (; it != entries_.end() && it->first.first == n; ++it) t = checked_add(t, it->second);
    return t;
}

std::string CountTable::to_csv() const {
    std::ostringstream os;
    os << "n,m,count\n";
    for (const auto& [key, c] : entries_)
        os << key.first << "," << key.second << "," << c << "\n";
    return os.str();
}

std::string CountTable::to_json() const {
    std::ostringstream os;
    os << "{\"variant\":\"" << label_ << "\",\"max_n\":" << max_n_ << ",\"entries\":[";
    bool first = true;
    for (const auto& [key, c] : entries_) {
        if (!first) os << ",";
        first = false;
        os << "[" << key.first << "," << key.second << "," << c << "]";
    }
    os << "]}";
    return os.str();
}

namespace {

// Appending p to a valid nondecreasing prefix: all newly completed windows
// involve only the last few parts, so validity extends incrementally.
bool extend_ok_mod9(const VariantInfo& info, const std::vector<int>& a, int p) {
    const int k = static_cast<int>(a.size());
    if (k == 0 && p < info.min_part) return false;
    if (info.capped_part > 0 && p == info.capped_part) {
        int occ = 1;
        for (int i = k - 1; i >= 0 && a[i] == p; --i) ++occ;
        if (occ > info.cap) return false;
    }
    if (k >= 2 && p - a[k - 2] < 3) return false;
    if (k >= 1 && p - a[k - 1] <= 1 && (a[k - 1] + p) % 3 != info.residue) return false;
    return true;
}

bool extend_ok_mod12(const VariantInfo& info, const std::vector<int>& a, int p) {
    const int k = static_cast<int>(a.size());
    if (k == 0 && p < info.min_part) return false;
    if (info.capped_part > 0 && p == info.capped_part) {
        int occ = 1;
        for (int i = k - 1; i >= 0 && a[i] == p; --i) ++occ;
        if (occ > info.cap) return false;
    }
    if (k >= 3 && p - a[k - 3] < 3) return false;
    if (k >= 2 && p - a[k - 2] <= 1 && (a[k - 2] + a[k - 1] + p) % 3 != info.residue)
        return false;
    return true;
}

void enumerate_rec(const VariantInfo& info, std::vector<int>& a, long long weight, int max_n,
                   const std::function<void(const std::vector<int>&, long long)>& visit) {
    visit(a, weight);
    const int lo = a.empty() ? 1 : a.back();
    for (int p = lo; weight + p <= max_n; ++p) {
        bool ok = false;
        switch (info.family) {
            case Family::Mod9:
                ok = extend_ok_mod9(info, a, p);
                break;
            case Family::Mod12:
                ok = extend_ok_mod12(info, a, p);
                break;
            case Family::Congruence: {
                int r = p % info.modulus;
                if (r == 0) r = info.modulus;
                ok = std::find(info.residues.begin(), info.residues.end(), r) !=
                     info.residues.end();
                break;
            }
        }
        if (!ok) continue;
        a.push_back(p);
        enumerate_rec(info, a, weight + p, max_n, visit);
        a.pop_back();
    }
}

}  // namespace

CountTable enumerate(Variant v, int max_n) {
    if (max_n < 0) throw ArgumentError("max_n must be nonnegative");
    const VariantInfo& info = variant_info(v);
    CountTable table(info.name, max_n);
    std::vector<int> a;
    enumerate_rec(info, a, 0, max_n,
                  [&](const std::vector<int>& parts, long long w) {
                      if (info.family == Family::Mod12) {
                          // Distance-3 gap forces < 4 copies of any value.
                          for (size_t i = 0; i + 3 < parts.size(); ++i)
                              if (parts[i] == parts[i + 3])
                                  throw IntegrityError("mod-12 member with 4 equal parts");
                      }
                      table.bump(static_cast<int>(w), static_cast<int>(parts.size()));
                  });
    return table;
}

CountTable enumerate_congruence(int modulus, const std::vector<int>& residues, int max_n) {
    if (modulus < 2) throw ArgumentError("modulus must be >= 2");
    if (residues.empty()) throw ArgumentError("residue set must be nonempty");
    for (int r : residues)
        if (r < 1 || r > modulus) throw ArgumentError("residue out of range [1, modulus]");
    if (max_n < 0) throw ArgumentError("max_n must be nonnegative");
    std::ostringstream label;
    label << "cong(" << modulus << ";";
    for (size_t i = 0; i < residues.size(); ++i) label << (i ? "," : "") << residues[i];
    label << ")";
    VariantInfo info{Variant::CONG1, "", Family::Congruence, 0, 1, 0, 0, modulus, residues};
    CountTable table(label.str(), max_n);
    std::vector<int> a;
    enumerate_rec(info, a, 0, max_n, [&](const std::vector<int>& parts, long long w) {
        table.bump(static_cast<int>(w), static_cast<int>(parts.size()));
    });
    return table;
}

void for_each_member(Variant v, int n, const std::function<void(const Partition&)>& fn) {
    const VariantInfo& info = variant_info(v);
    std::vector<int> a;
    enumerate_rec(info, a, 0, n, [&](const std::vector<int>& parts, long long w) {
        if (w == n) fn(Partition(parts));
    });
}

std::vector<Partition> members(Variant v, int n) {
    std::vector<Partition> out;
    for_each_member(v, n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace krlab
