#include "degseq/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace degseq {

namespace {

// Guards against r^t items expanding into absurd term counts.
constexpr std::size_t kMaxTerms = std::size_t{1} << 20;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string quoted(std::string_view token) { return "'" + std::string(token) + "'"; }

// Strict base-10 parse of a full field; no sign, no stray characters.
long long parse_number(std::string_view digits, std::string_view item, const char* role) {
    if (digits.empty()) fail("malformed item " + quoted(item));
    if (digits.front() == '-') fail(std::string("negative ") + role + " in item " + quoted(item));
    long long value = 0;
    const char* first = digits.data();
    const char* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) fail("malformed item " + quoted(item));
    if (value == 0) fail(std::string("zero ") + role + " in item " + quoted(item));
    return value;
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
    for (int t : terms_) {
        if (t < 1) fail("degree sequence term must be positive, got " + std::to_string(t));
    }
    std::sort(terms_.begin(), terms_.end(), std::greater<int>());
}

long long DegreeSequence::sum() const {
    return std::accumulate(terms_.begin(), terms_.end(), 0LL);
}

int DegreeSequence::max_term() const {
    if (terms_.empty()) fail("empty degree sequence has no terms");
    return terms_.front();
}

int DegreeSequence::min_term() const {
    if (terms_.empty()) fail("empty degree sequence has no terms");
    return terms_.back();
}

int DegreeSequence::multiplicity(int value) const {
    return static_cast<int>(std::count(terms_.begin(), terms_.end(), value));
}

DegreeSequence parse_sequence(std::string_view text) {
    std::vector<int> terms;
    std::size_t pos = 0;
    bool saw_item = false;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos])))) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ',' && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        std::string_view item = text.substr(pos, end - pos);
        pos = end;
        saw_item = true;

        std::size_t caret = item.find('^');
        long long degree = 0;
        long long repeat = 1;
        if (caret == std::string_view::npos) {
            degree = parse_number(item, item, "degree");
        } else {
            if (item.find('^', caret + 1) != std::string_view::npos) fail("malformed item " + quoted(item));
            degree = parse_number(item.substr(0, caret), item, "degree");
            repeat = parse_number(item.substr(caret + 1), item, "repeat count");
        }
        if (degree > std::numeric_limits<int>::max()) fail("malformed item " + quoted(item));
        if (terms.size() + static_cast<std::size_t>(repeat) > kMaxTerms) {
            fail("degree sequence too long (limit " + std::to_string(kMaxTerms) + " terms)");
        }
        terms.insert(terms.end(), static_cast<std::size_t>(repeat), static_cast<int>(degree));
    }
    if (!saw_item) fail("empty degree sequence text");
    return DegreeSequence(std::move(terms));
}

std::string format_sequence(const DegreeSequence& seq) {
    std::string out;
    const auto& t = seq.terms();
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(t[i]);
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

}  // namespace degseq
