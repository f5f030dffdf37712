#include "advlab/languages.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include <boost/multiprecision/cpp_int.hpp>

#include "advlab/error.hpp"

namespace advlab {

namespace {

using BigInt = boost::multiprecision::cpp_int;

void require_alphabet(std::string_view w, std::string_view alphabet, std::string_view who) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (alphabet.find(w[i]) == std::string_view::npos)
            throw InputDomainError(i + 1, std::string(who) + ": symbol '" + std::string(1, w[i]) +
                                              "' at position " + std::to_string(i + 1) +
                                              " is outside {" + std::string(alphabet) + "}");
}

std::uint64_t ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : std::bit_width(x - 1); }

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw UnknownNameError("cannot parse number in '" + std::string(whole) + "'");
    return v;
}

} // namespace

// Growth functions

GrowthFunction growth_sqrt() {
    return {"sqrt", [](std::uint64_t n) {
                std::uint64_t r = 0;
                while (r * r < n)
                    ++r;
                return r;
            }};
}

GrowthFunction growth_log2() {
    return {"log2", [](std::uint64_t n) { return std::max<std::uint64_t>(1, ceil_log2(n)); }};
}

GrowthFunction growth_loglog() {
    // Smallest j with 2^(2^j) >= n + 3.
    return {"loglog", [](std::uint64_t n) {
                std::uint64_t j = 0;
                while (j < 6 && (std::uint64_t{1} << (std::uint64_t{1} << j)) < n + 3)
                    ++j;
                return j;
            }};
}

GrowthFunction growth_by_name(std::string_view name) {
    if (name == "sqrt")
        return growth_sqrt();
    if (name == "log2")
        return growth_log2();
    if (name == "loglog")
        return growth_loglog();
    throw UnknownNameError("unknown growth function '" + std::string(name) + "'");
}

// Seeds

BinarySeed BinarySeed::splitmix(std::uint64_t seed) {
    BinarySeed s;
    s.seed_ = seed;
    return s;
}

BinarySeed BinarySeed::from_bits(std::string bits) {
    if (bits.find_first_not_of("01") != std::string::npos)
        throw ParseError("binary seed: bits must be 0 or 1");
    BinarySeed s;
    s.explicit_ = true;
    s.prefix_ = std::move(bits);
    return s;
}

int BinarySeed::bit(std::size_t index) const {
    if (index == 0)
        throw PreconditionError("binary seed: bits are 1-indexed");
    const std::size_t i = index - 1;
    if (explicit_)
        return i < prefix_.size() ? prefix_[i] - '0' : 0;
    return static_cast<int>((splitmix64(seed_, i / 64) >> (i % 64)) & 1u);
}

std::string BinarySeed::bits(std::size_t first, std::size_t count) const {
    std::string out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(static_cast<char>('0' + bit(first + i)));
    return out;
}

bool for_each_word_until(std::string_view alphabet, std::size_t n,
                         const std::function<bool(const std::string &)> &visit) {
    if (alphabet.empty())
        return n == 0 ? visit(std::string()) : true;
    std::vector<std::size_t> digits(n, 0);
    std::string word(n, alphabet[0]);
    while (true) {
        if (!visit(word))
            return false;
        std::size_t i = n;
        while (true) {
            if (i == 0)
                return true;
            --i;
            if (++digits[i] < alphabet.size()) {
                word[i] = alphabet[digits[i]];
                break;
            }
            digits[i] = 0;
            word[i] = alphabet[0];
        }
    }
}

void for_each_word(std::string_view alphabet, std::size_t n,
                   const std::function<void(const std::string &)> &visit) {
    for_each_word_until(alphabet, n, [&](const std::string &w) {
        visit(w);
        return true;
    });
}


// Alternating segments

bool segments_member(unsigned m, std::string_view w) {
    if (m == 0)
        throw PreconditionError("segments: m must be positive");
    require_alphabet(w, "01", "segments");
    const std::size_t n = w.size();
    if (n == 0 || n % (m + 1) != 0)
        return false;
    const std::size_t seg = n / (m + 1);
    for (std::size_t j = 0; j < n; ++j)
        if (w[j] != ((j / seg) % 2 ? '1' : '0'))
            return false;
    return true;
}

InkdotPattern segments_advice(unsigned m, std::size_t n) {
    if (m == 0)
        throw PreconditionError("segments: m must be positive");
    if (n == 0 || n % (m + 1) != 0)
        return InkdotPattern::empty(n);
    const std::size_t seg = n / (m + 1);
    std::vector<std::size_t> positions;
    for (std::size_t j = 1; j <= m; ++j)
        positions.push_back(j * seg + 1);
    return InkdotPattern(n, std::move(positions));
}

LanguageOracle segments_oracle(unsigned m) {
    if (m == 0)
        throw PreconditionError("segments: m must be positive");
    return {"Lm:" + std::to_string(m), "01",
            [m](std::string_view w) { return segments_member(m, w); },
            [m](std::size_t n) {
                std::vector<std::string> out;
                if (n > 0 && n % (m + 1) == 0) {
                    const std::size_t seg = n / (m + 1);
                    std::string w(n, '0');
                    for (std::size_t j = 0; j < n; ++j)
                        w[j] = (j / seg) % 2 ? '1' : '0';
                    out.push_back(std::move(w));
                }
                return out;
            }};
}

// Evenly spaced ones

std::uint64_t spaced_ones_gap(const GrowthFunction &f, std::size_t n) {
    if (n == 0)
        return 1;
    const std::uint64_t fn = f(n);
    if (fn == 0)
        throw PreconditionError("spaced ones: f(" + std::to_string(n) + ") must be positive");
    return (n + fn - 1) / fn;
}

bool spaced_ones_member(const GrowthFunction &f, std::string_view w) {
    require_alphabet(w, "01", "spaced ones");
    const std::uint64_t gap = spaced_ones_gap(f, w.size());
    for (std::size_t i = 1; i <= w.size(); ++i)
        if ((w[i - 1] == '1') != (i % gap == 0))
            return false;
    return true;
}

InkdotPattern spaced_ones_advice(const GrowthFunction &f, std::size_t n) {
    const std::uint64_t gap = spaced_ones_gap(f, n);
    std::vector<std::size_t> positions;
    for (std::uint64_t p = gap; p <= n; p += gap)
        positions.push_back(p);
    if (n > 0 && positions.size() > f(n))
        throw AdviceMismatchError("spaced ones: " + std::to_string(positions.size()) +
                                  " dots exceed f(" + std::to_string(n) + ")");
    return InkdotPattern(n, std::move(positions));
}

LanguageOracle spaced_ones_oracle(const GrowthFunction &f) {
    return {"Lf:" + f.name, "01", [f](std::string_view w) { return spaced_ones_member(f, w); },
            [f](std::size_t n) {
                return std::vector<std::string>{pattern_to_track(spaced_ones_advice(f, n))};
            }};
}

// Residue bit

bool residue_bit_member(unsigned k, std::string_view w) {
    if (k < 2)
        throw PreconditionError("residue bit: k must be at least 2");
    require_alphabet(w, "01", "residue bit");
    if (w.size() < k)
        return true;
    return w[w.size() % k] == '1';
}

std::string residue_bit_prefix_advice(unsigned k, std::size_t n) {
    if (k < 2)
        throw PreconditionError("residue bit: k must be at least 2");
    std::string out(k, '0');
    if (n >= k)
        out[n % k] = '1';
    return out;
}

InkdotPattern residue_bit_inkdot_advice(unsigned k, std::size_t n) {
    if (k < 2)
        throw PreconditionError("residue bit: k must be at least 2");
    if (n < k)
        return InkdotPattern::empty(n);
    return InkdotPattern(n, {n % k + 1});
}

LanguageOracle residue_bit_oracle(unsigned k) {
    if (k < 2)
        throw PreconditionError("residue bit: k must be at least 2");
    return {"LANGk:" + std::to_string(k), "01",
            [k](std::string_view w) { return residue_bit_member(k, w); },
            [k](std::size_t n) {
                std::vector<std::string> out;
                if (n < k) {
                    for_each_word("01", n, [&](const std::string &w) { out.push_back(w); });
                    return out;
                }
                const std::size_t fixed = n % k;
                for_each_word("01", n - 1, [&](const std::string &rest) {
                    std::string w = rest;
                    w.insert(w.begin() + static_cast<std::ptrdiff_t>(fixed), '1');
                    out.push_back(std::move(w));
                });
                return out;
            }};
}

// Drifting subwords

bool drift_member(const GrowthFunction &g, std::string_view w) {
    require_alphabet(w, "01#", "drift");
    const std::size_t n = w.size();
    const std::uint64_t width = g(n);
    if (width == 0 || width > n)
        return false;
    std::size_t pos = 0;
    std::size_t count = 0;
    std::size_t prev = 0;
    while (pos < n && w[pos] != '#') {
        if (pos + width >= n)
            return false;
        std::size_t one = 0;
        for (std::size_t j = 0; j < width; ++j) {
            const char c = w[pos + j];
            if (c == '#')
                return false;
            if (c == '1') {
                if (one)
                    return false;
                one = j + 1;
            }
        }
        if (!one || w[pos + width] != '#')
            return false;
        if (count > 0 && (one + 1 < prev || one > prev + 1))
            return false;
        prev = one;
        ++count;
        pos += width + 1;
    }
    if (count == 0)
        return false;
    for (; pos < n; ++pos)
        if (w[pos] != '#')
            return false;
    return true;
}

InkdotPattern drift_advice(const GrowthFunction &g, std::size_t n) {
    const std::uint64_t width = g(n);
    if (n == 0 || width == 0 || width > n)
        return InkdotPattern::empty(n);
    return InkdotPattern(n, {static_cast<std::size_t>(width)});
}

LanguageOracle drift_oracle(const GrowthFunction &g) {
    return {"Lg:" + g.name, "01#", [g](std::string_view w) { return drift_member(g, w); },
            [g](std::size_t n) {
                std::vector<std::string> out;
                const std::uint64_t width = g(n);
                if (n == 0 || width == 0 || width > n)
                    return out;
                for (std::size_t m = 1; m * (width + 1) <= n; ++m) {
                    const std::size_t trailing = n - m * (width + 1);
                    std::vector<std::size_t> ps(m);
                    // Depth-first over one-positions, each within 1 of the previous.
                    std::function<void(std::size_t)> extend = [&](std::size_t i) {
                        if (i == m) {
                            std::string w;
                            for (std::size_t p : ps) {
                                std::string sub(width, '0');
                                sub[p - 1] = '1';
                                w += sub;
                                w += '#';
                            }
                            w.append(trailing, '#');
                            out.push_back(std::move(w));
                            return;
                        }
                        const std::size_t lo = i == 0 ? 1 : std::max<std::size_t>(1, ps[i - 1] - 1);
                        const std::size_t hi =
                            i == 0 ? width : std::min<std::size_t>(width, ps[i - 1] + 1);
                        for (std::size_t p = lo; p <= hi; ++p) {
                            ps[i] = p;
                            extend(i + 1);
                        }
                    };
                    extend(0);
                }
                std::sort(out.begin(), out.end(), [](const std::string &a, const std::string &b) {
                    // Alphabet order "01#": map # above the digits.
                    for (std::size_t i = 0; i < a.size(); ++i) {
                        if (a[i] == b[i])
                            continue;
                        auto rank = [](char c) { return c == '#' ? 2 : c - '0'; };
                        return rank(a[i]) < rank(b[i]);
                    }
                    return false;
                });
                return out;
            }};
}

// Seeded language

std::size_t seeded_chunk_length(unsigned k, std::size_t i) {
    if (k < 3)
        throw PreconditionError("seeded language: k must be at least 3");
    return static_cast<std::size_t>(msb(pow(BigInt(k), static_cast<unsigned>(i))));
}

std::size_t seeded_chunk_offset(unsigned k, std::size_t i) {
    std::size_t offset = 1;
    for (std::size_t u = 1; u < i; ++u)
        offset += seeded_chunk_length(k, u);
    return offset;
}

std::string seeded_member(const BinarySeed &seed, unsigned k, std::size_t i) {
    if (i == 0)
        throw PreconditionError("seeded language: member index must be positive");
    const std::size_t len = seeded_chunk_length(k, i);
    const std::string chunk = seed.bits(seeded_chunk_offset(k, i), len);
    BigInt value = 0;
    for (char c : chunk)
        value = value * 2 + (c - '0');
    std::string out(i, '0');
    for (std::size_t j = i; j > 0 && value > 0; --j) {
        out[j - 1] = static_cast<char>('0' + static_cast<unsigned>(value % k));
        value /= k;
    }
    return out;
}

std::string translate_to_binary(std::string_view word, unsigned k, std::size_t length) {
    if (word.empty())
        throw PreconditionError("translate_to_binary: word must be nonempty");
    if (k < 2 || k > 10)
        throw PreconditionError("translate_to_binary: base must be in [2, 10]");
    BigInt value = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int d = word[i] - '0';
        if (d < 0 || d >= static_cast<int>(k))
            throw InputDomainError(i + 1, "translate_to_binary: digit '" +
                                              std::string(1, word[i]) + "' is not base " +
                                              std::to_string(k));
        value = value * k + d;
    }
    const std::size_t needed = value == 0 ? 0 : msb(value) + 1;
    if (needed > length)
        throw OverflowError("translate_to_binary: value needs " + std::to_string(needed) +
                            " bits but only " + std::to_string(length) + " are available");
    std::string out(length, '0');
    for (std::size_t j = length; j > 0 && value > 0; --j) {
        out[j - 1] = bit_test(value, 0) ? '1' : '0';
        value >>= 1;
    }
    return out;
}

LanguageOracle seeded_oracle(const BinarySeed &seed, unsigned k, std::string name) {
    if (k < 3 || k > 10)
        throw PreconditionError("seeded language: k must be in [3, 10]");
    std::string alphabet;
    for (unsigned d = 0; d < k; ++d)
        alphabet.push_back(static_cast<char>('0' + d));
    return {std::move(name), alphabet,
            [seed, k, alphabet](std::string_view w) {
                require_alphabet(w, alphabet, "seeded");
                return !w.empty() && w == seeded_member(seed, k, w.size());
            },
            [seed, k](std::size_t n) {
                std::vector<std::string> out;
                if (n > 0)
                    out.push_back(seeded_member(seed, k, n));
                return out;
            }};
}

LanguageOracle universal_oracle(std::string alphabet) {
    if (alphabet.empty())
        throw PreconditionError("universal oracle: alphabet must be nonempty");
    const std::string name = "all:" + alphabet;
    return {name, alphabet,
            [alphabet](std::string_view w) {
                require_alphabet(w, alphabet, "universal");
                return true;
            },
            [alphabet](std::size_t n) {
                std::vector<std::string> out;
                for_each_word(alphabet, n, [&](const std::string &w) { out.push_back(w); });
                return out;
            }};
}

SeededParams parse_seeded_name(std::string_view name, std::uint64_t default_seed) {
    if (!name.starts_with("Lw"))
        throw UnknownNameError("'" + std::string(name) + "' is not a seeded-language name");
    SeededParams params{3, default_seed};
    std::string_view rest = name.substr(2);
    if (!rest.empty()) {
        if (rest[0] != ':')
            throw UnknownNameError("unknown name '" + std::string(name) + "'");
        rest.remove_prefix(1);
    }
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (item.starts_with("k="))
            params.k = static_cast<unsigned>(parse_uint(item.substr(2), name));
        else if (item.starts_with("seed="))
            params.seed = parse_uint(item.substr(5), name);
        else
            throw UnknownNameError("unknown parameter '" + std::string(item) + "' in '" +
                                   std::string(name) + "'");
    }
    return params;
}

LanguageOracle oracle_by_name(std::string_view name, std::uint64_t default_seed) {
    const auto colon = name.find(':');
    const std::string_view head = name.substr(0, colon);
    const std::string_view arg =
        colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);

    if (head == "Lm" && !arg.empty())
        return segments_oracle(static_cast<unsigned>(parse_uint(arg, name)));
    if (colon == std::string_view::npos && name.size() > 1 && name[0] == 'L' &&
        name.find_first_not_of("0123456789", 1) == std::string_view::npos)
        return segments_oracle(static_cast<unsigned>(parse_uint(name.substr(1), name)));
    if (head == "Lf" && !arg.empty())
        return spaced_ones_oracle(growth_by_name(arg));
    if (head == "LANGk" && !arg.empty())
        return residue_bit_oracle(static_cast<unsigned>(parse_uint(arg, name)));
    if (head == "Lg" && !arg.empty())
        return drift_oracle(growth_by_name(arg));
    if (head == "all" && !arg.empty())
        return universal_oracle(std::string(arg));
    if (head == "Lw") {
        const auto params = parse_seeded_name(name, default_seed);
        return seeded_oracle(BinarySeed::splitmix(params.seed), params.k,
                             "Lw:k=" + std::to_string(params.k) +
                                 ",seed=" + std::to_string(params.seed));
    }
    throw UnknownNameError("unknown oracle '" + std::string(name) + "'");
}

} // namespace advlab
