#include "cremona/homaloidal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace cremona {

namespace {

std::vector<int64_t> sorted_desc(std::vector<int64_t> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

void drop_zeros(std::vector<int64_t>& v) {
    v.erase(std::remove(v.begin(), v.end(), 0), v.end());
}

bool noether_holds(int64_t d, const std::vector<int64_t>& m) {
    int64_t sum = 0, sq = 0;
    for (int64_t x : m) {
        sum = checked_add(sum, x);
        sq = checked_add(sq, checked_mul(x, x));
    }
    return sum == checked_mul(3, checked_sub(d, 1)) && sq == checked_sub(checked_mul(d, d), 1);
}

int64_t mult_at(const std::vector<int64_t>& m, size_t i) {
    return i < m.size() ? m[i] : 0;
}

}  // namespace

bool operator<(const HomaloidalType& a, const HomaloidalType& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    // anti-lexicographic: larger multiplicity vectors come first
    return std::lexicographical_compare(b.mults_.begin(), b.mults_.end(),
                                        a.mults_.begin(), a.mults_.end());
}

size_t TypeHash::operator()(const HomaloidalType& t) const {
    size_t h = std::hash<int64_t>{}(t.degree());
    for (int64_t m : t.mults())
        h ^= std::hash<int64_t>{}(m) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

HomaloidalType HomaloidalType::make(int64_t degree, std::vector<int64_t> raw_mults) {
    auto mults = sorted_desc(std::move(raw_mults));
    drop_zeros(mults);
    for (int64_t m : mults)
        if (m < 0)
            throw NegativeEntryError("negative multiplicity " + std::to_string(m));
    if (!noether_holds(degree, mults))
        throw NoetherViolationError("Noether equalities fail for " + format_raw_type(degree, mults));
    auto res = hudson_test(degree, mults);
    if (!res.proper)
        throw NotProperError("not a proper homaloidal type: " + format_raw_type(degree, mults),
                             std::move(res.trace));
    return HomaloidalType(degree, std::move(mults));
}

LatticeClass HomaloidalType::to_lattice() const {
    std::map<PointLabel, int64_t> mm;
    for (size_t i = 0; i < mults_.size(); ++i) mm[PointLabel{static_cast<int32_t>(i)}] = mults_[i];
    return LatticeClass(degree_, std::move(mm));
}

HudsonResult hudson_test(int64_t degree, std::vector<int64_t> mults) {
    mults = sorted_desc(std::move(mults));
    drop_zeros(mults);
    if (!noether_holds(degree, mults))
        throw std::invalid_argument("hudson_test: Noether equalities must hold");

    HudsonResult res;
    int64_t d = degree;
    auto m = mults;
    res.trace.push_back({d, m});
    for (;;) {
        if (d == 1 && m.empty()) {
            res.proper = true;
            return res;
        }
        if (d < 1 || (!m.empty() && m.back() < 0)) {
            res.proper = false;
            return res;
        }
        // Noether inequality guarantees the quadratic move at the three
        // largest multiplicities strictly decreases the degree.
        int64_t m1 = mult_at(m, 0), m2 = mult_at(m, 1), m3 = mult_at(m, 2);
        int64_t t = checked_sub(checked_sub(checked_sub(d, m1), m2), m3);
        d = checked_add(d, t);
        while (m.size() < 3) m.push_back(0);
        m[0] = checked_add(m1, t);
        m[1] = checked_add(m2, t);
        m[2] = checked_add(m3, t);
        m = sorted_desc(std::move(m));
        drop_zeros(m);
        res.trace.push_back({d, m});
    }
}

std::set<int64_t> s_set(const HomaloidalType& t) {
    if (t.degree() < 2) throw DegreeOneError("s_set: type (1) has no predecessor move");
    const auto& m = t.mults();
    const int64_t d = t.degree();
    const int64_t r = t.base_count() - 1;  // points are m_0..m_r
    std::set<int64_t> out;
    for (int64_t s = 1; 2 * s <= r; ++s) {
        int64_t lo = m[0] + mult_at(m, 2 * s - 1) + mult_at(m, 2 * s);
        int64_t hi = m[0] + mult_at(m, 2 * s + 1) + mult_at(m, 2 * s + 2);
        if (lo >= d && d >= hi) out.insert(s);
    }
    return out;
}

HomaloidalType predecessor(const HomaloidalType& t) {
    if (t.degree() < 2) throw DegreeOneError("predecessor: type (1) has no predecessor");
    const auto& m = t.mults();
    const int64_t d = t.degree();
    auto ss = s_set(t);
    const int64_t s = *ss.begin();

    int64_t eps = 0;
    for (int64_t i = 1; i <= s; ++i)
        eps = checked_add(eps, checked_sub(checked_add(checked_add(m[0], mult_at(m, 2 * i - 1)), mult_at(m, 2 * i)), d));

    std::vector<int64_t> out;
    out.reserve(m.size());
    out.push_back(checked_sub(m[0], eps));
    for (int64_t i = 1; i <= 2 * s; ++i)
        out.push_back(checked_sub(checked_sub(d, m[0]), mult_at(m, i)));
    for (size_t i = static_cast<size_t>(2 * s + 1); i < m.size(); ++i) out.push_back(m[i]);

    out = sorted_desc(std::move(out));
    drop_zeros(out);
    return HomaloidalType(checked_sub(d, eps), std::move(out));
}

HomaloidalType castelnuovo_predecessor(const HomaloidalType& t) {
    if (t.degree() < 2)
        throw DegreeOneError("castelnuovo_predecessor: type (1) is its own predecessor");
    const auto& m = t.mults();
    const int64_t d = t.degree();

    // Major base-points: with the list sorted they form the prefix m_1..m_h.
    size_t h = 0;
    while (1 + h < m.size() && checked_add(m[0], checked_mul(2, m[1 + h])) > d) ++h;
    if (h % 2 == 1) --h;  // drop one major point of minimal multiplicity
    const auto n = static_cast<int64_t>(h / 2);

    int64_t delta_sum = 0;
    for (size_t i = 1; i <= h; ++i) delta_sum = checked_add(delta_sum, m[i]);

    std::vector<int64_t> out;
    out.reserve(m.size());
    out.push_back(checked_sub(checked_sub(checked_mul(n, d), checked_mul(n - 1, m[0])), delta_sum));
    for (size_t i = 1; i <= h; ++i) out.push_back(checked_sub(checked_sub(d, m[0]), m[i]));
    for (size_t i = h + 1; i < m.size(); ++i) out.push_back(m[i]);

    int64_t d2 = checked_sub(checked_sub(checked_mul(n + 1, d), checked_mul(n, m[0])), delta_sum);
    out = sorted_desc(std::move(out));
    drop_zeros(out);
    return HomaloidalType(d2, std::move(out));
}

PredecessorChain chain(const HomaloidalType& t) {
    PredecessorChain c;
    c.steps.push_back(t);
    while (c.steps.back().degree() > 1) c.steps.push_back(predecessor(c.steps.back()));
    return c;
}

int64_t length(const HomaloidalType& t) {
    static thread_local std::unordered_map<HomaloidalType, int64_t, TypeHash> memo;
    int64_t n = 0;
    std::vector<HomaloidalType> path;
    HomaloidalType cur = t;
    while (cur.degree() > 1) {
        auto it = memo.find(cur);
        if (it != memo.end()) {
            n += it->second;
            break;
        }
        path.push_back(cur);
        cur = predecessor(cur);
        ++n;
    }
    int64_t v = n;
    for (const auto& s : path) memo.emplace(s, v--);
    return n;
}

bool is_jonquieres(const HomaloidalType& t) {
    if (t.degree() == 1) return true;
    const auto& m = t.mults();
    if (m[0] != t.degree() - 1) return false;
    if (static_cast<int64_t>(m.size()) != 2 * t.degree() - 1) return false;
    for (size_t i = 1; i < m.size(); ++i)
        if (m[i] != 1) return false;
    return true;
}

std::vector<HomaloidalType> enumerate_types(
    int64_t d, const std::function<void(const HomaloidalType&)>& big_s_diagnostic) {
    if (d < 1) throw std::invalid_argument("enumerate_types: degree must be >= 1");
    std::vector<HomaloidalType> out;
    if (d == 1) {
        out.push_back(HomaloidalType::identity());
        return out;
    }

    const int64_t target_sum = checked_mul(3, d - 1);
    const int64_t target_sq = checked_sub(checked_mul(d, d), 1);

    // Depth-first search over non-increasing positive sequences.  Trying the
    // largest admissible entry first emits candidates directly in
    // anti-lexicographic order.
    std::vector<int64_t> cur;
    auto emit = [&]() {
        if (hudson_test(d, cur).proper) {
            HomaloidalType t(d, cur);
            out.push_back(t);
            if (big_s_diagnostic && s_set(t).size() >= 3) big_s_diagnostic(t);
        }
    };
    // Remaining budget (sum, sq) is feasible with entries in [1, cap] iff
    // sum <= sq <= sum * cap; sq - sum must be even since m^2 - m always is.
    std::function<void(int64_t, int64_t, int64_t)> rec = [&](int64_t sum, int64_t sq, int64_t cap) {
        if (sum == 0) {
            if (sq == 0) emit();
            return;
        }
        for (int64_t v = std::min(cap, sum); v >= 1; --v) {
            if (checked_mul(v, v) > sq) continue;
            int64_t s2 = sum - v, q2 = sq - v * v;
            if (q2 < s2 || q2 > checked_mul(s2, v) || ((q2 - s2) & 1)) continue;
            cur.push_back(v);
            rec(s2, q2, v);
            cur.pop_back();
        }
    };
    for (int64_t m0 = d - 1; m0 >= 1; --m0) {
        if (checked_mul(m0, m0) > target_sq) continue;
        int64_t s2 = target_sum - m0, q2 = target_sq - m0 * m0;
        // Every later entry is bounded by both m0 and d - m0 (two base-points
        // never carry more than the degree in total).
        int64_t cap = std::min(m0, d - m0);
        if (s2 < 0 || q2 < s2 || q2 > checked_mul(s2, cap) || ((q2 - s2) & 1)) continue;
        cur.push_back(m0);
        rec(s2, q2, cap);
        cur.pop_back();
    }
    return out;
}

int64_t wright_distance(const HomaloidalType& t) { return checked_mul(2, length(t)); }

// ---------------------------------------------------------------------------
// Text grammar

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return i == s.size();
    }
    int64_t integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        int64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, value);
        if (ec != std::errc() || ptr != s.data() + i || start == i)
            throw ParseError("expected integer at position " + std::to_string(start));
        return value;
    }
};

}  // namespace

std::pair<int64_t, std::vector<int64_t>> parse_raw_type(std::string_view text) {
    Cursor c{text};
    if (!c.eat('(')) throw ParseError("type must start with '('");
    int64_t degree = c.integer();
    std::vector<int64_t> mults;
    if (c.eat(';')) {
        for (;;) {
            int64_t m = c.integer();
            int64_t rep = 1;
            if (c.eat('^')) {
                rep = c.integer();
                if (rep < 1) throw ParseError("repetition count must be positive");
                if (rep > 1000000) throw ParseError("repetition count too large");
            }
            for (int64_t k = 0; k < rep; ++k) mults.push_back(m);
            if (!c.eat(',')) break;
        }
    }
    if (!c.eat(')')) throw ParseError("type must end with ')'");
    if (!c.done()) throw ParseError("trailing characters after type");
    return {degree, std::move(mults)};
}

HomaloidalType parse_type(std::string_view text) {
    auto [d, m] = parse_raw_type(text);
    return HomaloidalType::make(d, std::move(m));
}

std::string format_raw_type(int64_t degree, const std::vector<int64_t>& mults) {
    std::ostringstream os;
    os << '(' << degree;
    if (!mults.empty()) {
        os << "; ";
        size_t i = 0;
        bool first = true;
        while (i < mults.size()) {
            size_t j = i;
            while (j < mults.size() && mults[j] == mults[i]) ++j;
            if (!first) os << ", ";
            first = false;
            os << mults[i];
            if (j - i > 1) os << '^' << (j - i);
            i = j;
        }
    }
    os << ')';
    return os.str();
}

std::string format_type(const HomaloidalType& t) { return format_raw_type(t.degree(), t.mults()); }

}  // namespace cremona
