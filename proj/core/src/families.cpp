#include "degseq/families.hpp"

#include <stdexcept>
#include <string>

namespace degseq {

namespace {

[[noreturn]] void bad_params(const char* kind, int n, int k, int second) {
    throw std::invalid_argument(std::string("family parameters out of range for ") + kind +
                                ": n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                ", " + (kind[4] == '3' ? "t=" : "i=") + std::to_string(second));
}

}  // namespace

DegreeSequence family_template(FamilyKind kind, int n, int k, int second) {
    std::vector<int> terms;
    terms.reserve(static_cast<std::size_t>(n > 0 ? n : 0));
    if (kind == FamilyKind::kCond3) {
        const int t = second;
        if (n < 5 || k < 3 || k > n - 2 || t < 3 || t > n - 2 || (k - t) % 2 == 0) {
            bad_params("cond3", n, k, t);
        }
        terms.push_back(n - 1);
        terms.push_back(k);
        terms.insert(terms.end(), static_cast<std::size_t>(t), 2);
        terms.insert(terms.end(), static_cast<std::size_t>(n - 2 - t), 1);
    } else {
        const int i = second;
        if (n < 5 || k < 1 || k > (n - 1) / 2 - 1 || i < 3 || i > n - 2 * k) {
            bad_params("cond4", n, k, i);
        }
        terms.push_back(n - k);
        terms.push_back(k + i);
        terms.insert(terms.end(), static_cast<std::size_t>(i), 2);
        terms.insert(terms.end(), static_cast<std::size_t>(n - i - 2), 1);
    }
    return DegreeSequence(std::move(terms));
}

std::optional<FamilyMatch> match_condition3(const DegreeSequence& seq) {
    const int n = seq.size();
    if (n < 5) return std::nullopt;
    if (seq.term(0) != n - 1) return std::nullopt;
    const int k = seq.term(1);
    if (k < 3 || k > n - 2) return std::nullopt;
    // Tail must be a run of 2s followed by 1s; t is forced by the 2-count.
    int t = 0;
    for (int idx = 2; idx < n; ++idx) {
        const int v = seq.term(idx);
        if (v > 2 || v < 1) return std::nullopt;
        if (v == 2) ++t;
    }
    if (t < 3 || t > n - 2) return std::nullopt;
    if ((k - t) % 2 == 0) return std::nullopt;
    FamilyMatch m{FamilyKind::kCond3, k, t};
    if (family_template(m.kind, n, m.k, m.second) != seq) return std::nullopt;
    return m;
}

std::optional<FamilyMatch> match_condition4(const DegreeSequence& seq) {
    const int n = seq.size();
    if (n < 5) return std::nullopt;
    // Both leading terms exceed 2 (k+i >= 4), so the 2s all sit in the tail
    // and (k, i) are forced: k from the first term, i from the 2-count.
    if (seq.term(1) < 4) return std::nullopt;
    int i = 0;
    for (int idx = 2; idx < n; ++idx) {
        const int v = seq.term(idx);
        if (v > 2 || v < 1) return std::nullopt;
        if (v == 2) ++i;
    }
    const int k = n - seq.term(0);
    if (k < 1 || k > (n - 1) / 2 - 1) return std::nullopt;
    if (i < 3 || i > n - 2 * k) return std::nullopt;
    if (seq.term(1) != k + i) return std::nullopt;
    FamilyMatch m{FamilyKind::kCond4, k, i};
    if (family_template(m.kind, n, m.k, m.second) != seq) return std::nullopt;
    return m;
}

}  // namespace degseq
