#include "unischubert/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "unischubert/errors.hpp"

namespace unischubert {

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw DomainError(std::string("malformed ") + what + ": '" + std::string(text) + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

} // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word))
{
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
        if (v < 1 || v > size() || seen[v])
            throw DomainError("not a permutation: " + to_string());
        seen[v] = true;
    }
}

Permutation::Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

Permutation Permutation::identity(int m)
{
    std::vector<int> w(std::max(m, 0));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int m)
{
    std::vector<int> w(std::max(m, 0));
    for (int i = 0; i < m; ++i) w[i] = m - i;
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int k, int m)
{
    return transposition(k, k + 1, m);
}

Permutation Permutation::transposition(int a, int b, int m)
{
    if (a < 1 || b < 1 || a > m || b > m)
        throw DomainError("transposition out of range");
    auto w = identity(m).word_;
    std::swap(w[a - 1], w[b - 1]);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text)
{
    return Permutation(parse_int_list(text, "permutation"));
}

int Permutation::operator()(int i) const
{
    return i >= 1 && i <= size() ? word_[i - 1] : i;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(word_.size());
    for (int i = 0; i < size(); ++i) inv[word_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const
{
    const int m = std::max(size(), other.size());
    std::vector<int> w(m);
    for (int i = 1; i <= m; ++i) w[i - 1] = (*this)(other(i));
    return Permutation(std::move(w));
}

Permutation Permutation::padded(int m) const
{
    if (m <= size()) return *this;
    auto w = word_;
    for (int i = size() + 1; i <= m; ++i) w.push_back(i);
    return Permutation(std::move(w));
}

Permutation Permutation::trimmed() const
{
    auto w = word_;
    while (!w.empty() && w.back() == static_cast<int>(w.size())) w.pop_back();
    Permutation p;
    p.word_ = std::move(w);
    return p;
}

int Permutation::length() const
{
    int inv = 0;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (word_[a] > word_[b]) ++inv;
    return inv;
}

bool Permutation::is_identity() const
{
    return trimmed().word_.empty();
}

std::string Permutation::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < word_.size(); ++i) os << (i ? "," : "") << word_[i];
    return os.str();
}

bool Permutation::operator==(const Permutation& other) const
{
    return trimmed().word_ == other.trimmed().word_;
}

std::strong_ordering Permutation::operator<=>(const Permutation& other) const
{
    const int m = std::max(size(), other.size());
    for (int i = 1; i <= m; ++i)
        if (auto c = (*this)(i) <=> other(i); c != 0) return c;
    return std::strong_ordering::equal;
}

std::vector<int> lehmer_code(const Permutation& w)
{
    std::vector<int> code(w.size(), 0);
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(j) < w(i)) ++code[i - 1];
    return code;
}

Permutation from_lehmer_code(std::span<const int> code)
{
    const int m = static_cast<int>(code.size());
    std::vector<int> remaining(m);
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<int> w;
    for (int i = 0; i < m; ++i) {
        if (code[i] < 0 || code[i] >= static_cast<int>(remaining.size()))
            throw DomainError("invalid Lehmer code");
        w.push_back(remaining[code[i]]);
        remaining.erase(remaining.begin() + code[i]);
    }
    return Permutation(std::move(w));
}

std::vector<int> code_prime(const Permutation& w, int n)
{
    if (w.trimmed().size() > n + 1)
        throw DomainError("permutation " + w.to_string() + " is not in S_" + std::to_string(n + 1));
    std::vector<int> code(n, 0);
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= k; ++j)
            if (w(j) > w(k + 1)) ++code[k - 1];
    return code;
}

Permutation from_code_prime(std::span<const int> code)
{
    // Lehmer code of w0 w w0 is (i_n, ..., i_1, 0).
    const int n = static_cast<int>(code.size());
    for (int k = 1; k <= n; ++k)
        if (code[k - 1] < 0 || code[k - 1] > k) throw DomainError("invalid modified code");
    std::vector<int> lehmer(code.rbegin(), code.rend());
    lehmer.push_back(0);
    auto conj = from_lehmer_code(lehmer);
    auto w0 = Permutation::longest(n + 1);
    return w0 * conj * w0;
}

BoxSet diagram_prime(const Permutation& w, int n)
{
    auto inv = w.inverse();
    BoxSet boxes;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (w(i + 1) <= j && inv(j + 1) <= i) boxes.emplace(i, j);
    return boxes;
}

BoxSet rothe_diagram(const Permutation& w, int n)
{
    auto inv = w.inverse();
    BoxSet boxes;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (w(i) > j && inv(j) > i) boxes.emplace(i, j);
    return boxes;
}

std::pair<BoxSet, BoxSet> diagram_classical_and_essential(const Permutation& w, int n)
{
    auto d = rothe_diagram(w, n);
    auto dp = diagram_prime(w, n);
    BoxSet ess;
    std::set_intersection(d.begin(), d.end(), dp.begin(), dp.end(), std::inserter(ess, ess.end()));
    return {std::move(d), std::move(ess)};
}

std::set<int> descents(const Permutation& w)
{
    std::set<int> out;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) out.insert(i);
    return out;
}

FlagProfile::FlagProfile(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty()) throw DomainError("empty flag profile");
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i] < 1 || (i > 0 && parts_[i] <= parts_[i - 1]))
            throw DomainError("flag profile must be strictly increasing positive integers: " + to_string());
}

FlagProfile FlagProfile::parse(std::string_view text)
{
    return FlagProfile(parse_int_list(text, "flag profile"));
}

std::string FlagProfile::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

bool is_in_SN(const Permutation& w, const FlagProfile& N)
{
    if (w.trimmed().size() > N.top()) return false;
    const auto& parts = N.parts();
    for (int d : descents(w))
        if (std::find(parts.begin(), parts.end(), d) == parts.end()) return false;
    return true;
}

std::vector<FlagProfile> all_flag_profiles(int max_top)
{
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << max_top); ++mask) {
        std::vector<int> parts;
        for (int t = 0; t < max_top; ++t)
            if (mask & (1u << t)) parts.push_back(t + 1);
        subsets.push_back(std::move(parts));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    std::vector<FlagProfile> out;
    for (auto& parts : subsets) out.emplace_back(std::move(parts));
    return out;
}

Permutation longest_in_SN(const FlagProfile& N)
{
    std::vector<int> w(N.top());
    for (int p = 1; p <= N.l(); ++p)
        for (int i = 1; i <= N.k(p); ++i) w[N.n(p - 1) + i - 1] = N.top() - N.n(p) + i;
    return Permutation(std::move(w));
}

std::vector<int> conjugate_partition(std::span<const int> lambda)
{
    std::vector<int> mu;
    if (lambda.empty()) return mu;
    const int first = *std::max_element(lambda.begin(), lambda.end());
    for (int c = 1; c <= first; ++c)
        mu.push_back(static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [c](int p) { return p >= c; })));
    return mu;
}

GrassmannianData grassmannian_data(const Permutation& w)
{
    auto desc = descents(w);
    if (desc.size() > 1)
        throw DomainError("permutation " + w.to_string() + " is not Grassmannian");
    GrassmannianData data;
    if (desc.empty()) return data;
    const int r = *desc.begin();
    data.descent = r;
    for (int i = r; i >= 1; --i)
        if (w(i) - i > 0) data.shape.push_back(w(i) - i);
    data.conjugate = conjugate_partition(data.shape);

    auto c = lehmer_code(w.inverse());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        std::size_t best = i;
        for (std::size_t j = i; j < c.size(); ++j)
            if (c[j] >= c[i]) best = j;
        data.flag.push_back(static_cast<int>(best) + 1);
    }
    std::sort(data.flag.begin(), data.flag.end());
    return data;
}

bool is_vexillary(const Permutation& w)
{
    const int m = w.size();
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            if (!(w(b) < w(a))) continue;
            for (int c = b + 1; c <= m; ++c) {
                if (!(w(c) > w(a))) continue;
                for (int d = c + 1; d <= m; ++d)
                    if (w(d) > w(a) && w(d) < w(c)) return false;
            }
        }
    return true;
}

std::vector<Permutation> all_permutations(int m)
{
    std::vector<int> w(std::max(m, 0));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace unischubert

std::size_t std::hash<unischubert::Permutation>::operator()(const unischubert::Permutation& w) const noexcept
{
    std::size_t h = 0;
    for (int v : w.trimmed().word()) h = h * 131 + static_cast<std::size_t>(v);
    return h;
}
