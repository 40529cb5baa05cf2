#pragma once

#include <cctype>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcpa/algebra.hpp"
#include "bcpa/errors.hpp"

namespace bcpa {

// Sequence over r roots of unity, kept in index notation: entry e stands for
// the value exp(2*pi*i*e/r), with every exponent reduced into [0, r).
struct RootSequence {
    int r = 1;
    std::vector<int> exponents;

    std::size_t size() const { return exponents.size(); }
    friend bool operator==(const RootSequence&, const RootSequence&) = default;
};

struct QuaternionSequence {
    std::vector<Quaternion<int>> values;

    std::size_t size() const { return values.size(); }
    friend bool operator==(const QuaternionSequence&, const QuaternionSequence&) = default;
};

template <class S>
struct seq_traits;

template <>
struct seq_traits<RootSequence> {
    using Ops = RootOps;
    using Element = int;
    static Ops ops(const RootSequence& s) { return RootOps(s.r); }
    static const std::vector<int>& elems(const RootSequence& s) { return s.exponents; }
    static RootSequence rebuild(const RootSequence& like, std::vector<int> e) {
        return {like.r, std::move(e)};
    }
    static void require_same_domain(const RootSequence& a, const RootSequence& b) {
        if (a.r != b.r)
            throw DomainMismatchError("root orders differ: " + std::to_string(a.r) + " vs " +
                                      std::to_string(b.r));
    }
};

template <>
struct seq_traits<QuaternionSequence> {
    using Ops = QuatOps;
    using Element = Quaternion<int>;
    static Ops ops(const QuaternionSequence&) { return {}; }
    static const std::vector<Quaternion<int>>& elems(const QuaternionSequence& s) {
        return s.values;
    }
    static QuaternionSequence rebuild(const QuaternionSequence&,
                                      std::vector<Quaternion<int>> v) {
        return {std::move(v)};
    }
    static void require_same_domain(const QuaternionSequence&, const QuaternionSequence&) {}
};

// Frank sequence of length r*r: exponent at position q*r + s is (q*s) mod r.
inline RootSequence frank(int r) {
    if (r < 1) throw InvalidOrderError("frank: root order must be >= 1, got " + std::to_string(r));
    RootSequence seq{r, {}};
    seq.exponents.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
    for (int q = 0; q < r; ++q)
        for (int s = 0; s < r; ++s)
            seq.exponents.push_back(static_cast<int>(static_cast<long long>(q) * s % r));
    return seq;
}

// Cyclic decimation: output[i] = input[(t*i) mod n]. A permutation of the
// sequence exactly when gcd(t, n) = 1, which is required.
template <class S>
S decimate(const S& seq, int t) {
    const auto& in = seq_traits<S>::elems(seq);
    const int n = static_cast<int>(in.size());
    if (n < 1) throw Error("decimate: empty sequence");
    if (t < 1 || std::gcd(t, n) != 1)
        throw DecimationError("decimate: stride " + std::to_string(t) +
                              " is not coprime with length " + std::to_string(n));
    std::vector<typename seq_traits<S>::Element> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            in[static_cast<std::size_t>(static_cast<long long>(t) * i % n)];
    return seq_traits<S>::rebuild(seq, std::move(out));
}

// Cyclic right rotation by s places: output[i] = input[(i - s) mod n].
template <class S>
S rotate_right(const S& seq, long long s) {
    const auto& in = seq_traits<S>::elems(seq);
    const int n = static_cast<int>(in.size());
    if (n < 1) throw Error("rotate_right: empty sequence");
    std::vector<typename seq_traits<S>::Element> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = in[static_cast<std::size_t>(floor_mod(i - s, n))];
    return seq_traits<S>::rebuild(seq, std::move(out));
}

// Periodic autocorrelation at every shift: value(s) = sum_i v[i] * conj(v[i+s]).
// The zero-shift value equals the sequence length for unit-magnitude entries.
template <class S>
std::vector<typename seq_traits<S>::Ops::Value> periodic_autocorrelation(const S& seq) {
    const auto ops = seq_traits<S>::ops(seq);
    const auto& v = seq_traits<S>::elems(seq);
    const int n = static_cast<int>(v.size());
    std::vector<typename seq_traits<S>::Ops::Value> out(static_cast<std::size_t>(n), ops.zero());
    for (int s = 0; s < n; ++s) {
        auto acc = ops.zero();
        for (int i = 0; i < n; ++i)
            acc += ops.corr_term(v[static_cast<std::size_t>(i)],
                                 v[static_cast<std::size_t>((i + s) % n)]);
        out[static_cast<std::size_t>(s)] = acc;
    }
    return out;
}

// True iff every off-peak autocorrelation magnitude is below tol.
template <class S>
bool is_perfect(const S& seq, double tol = kDefaultTol) {
    const auto ops = seq_traits<S>::ops(seq);
    const auto acf = periodic_autocorrelation(seq);
    for (std::size_t s = 1; s < acf.size(); ++s)
        if (ops.magnitude(acf[s]) >= tol) return false;
    return true;
}

enum class AopCondition { A1, A2, A3 };

inline const char* to_string(AopCondition c) {
    switch (c) {
        case AopCondition::A1: return "A1";
        case AopCondition::A2: return "A2";
        case AopCondition::A3: return "A3";
    }
    return "?";
}

struct AopFailure {
    AopCondition condition;
    int residue;  // -1 for A3, whose sum spans all residues
    int shift;
    double magnitude;
};

struct AopReport {
    int d = 1;
    bool holds = false;
    std::vector<AopFailure> failures;  // holds <=> failures.empty()
};

// Orthogonality check on the d-decimated subsequences of seq. With
//   P(rho, s) = sum_{q=0}^{n/d-1} a[q*d+rho] * conj(a[(q*d+rho+s) mod n]),
// the report verifies:
//   A1: |P(rho, s)| < tol   for every s !≡ 0 (mod d) and every rho in [0, d)
//   A2: |P(rho, s)| < tol   for every s ≡ 0 (mod d), s !≡ 0 (mod n/d), every rho
//   A3: |sum_rho P(rho, s)| < tol   for every s ≡ 0 (mod n/d), s !≡ 0 (mod n)
template <class S>
AopReport aop_check(const S& seq, int d, double tol = kDefaultTol) {
    const auto& v = seq_traits<S>::elems(seq);
    const int n = static_cast<int>(v.size());
    if (d < 1 || n % d != 0)
        throw DivisorError("aop_check: d = " + std::to_string(d) +
                           " does not divide the sequence length " + std::to_string(n));
    const auto ops = seq_traits<S>::ops(seq);
    const int nd = n / d;

    auto partial = [&](int rho, int s) {
        auto acc = ops.zero();
        for (int q = 0; q < nd; ++q) {
            const int i = q * d + rho;
            acc += ops.corr_term(v[static_cast<std::size_t>(i)],
                                 v[static_cast<std::size_t>((i + s) % n)]);
        }
        return acc;
    };

    AopReport report{d, true, {}};
    for (int s = 1; s < n; ++s) {
        if (s % d != 0) {
            for (int rho = 0; rho < d; ++rho) {
                const double mag = ops.magnitude(partial(rho, s));
                if (mag >= tol)
                    report.failures.push_back({AopCondition::A1, rho, s, mag});
            }
        } else if (s % nd != 0) {
            for (int rho = 0; rho < d; ++rho) {
                const double mag = ops.magnitude(partial(rho, s));
                if (mag >= tol)
                    report.failures.push_back({AopCondition::A2, rho, s, mag});
            }
        }
        if (s % nd == 0) {
            auto acc = ops.zero();
            for (int rho = 0; rho < d; ++rho) acc += partial(rho, s);
            const double mag = ops.magnitude(acc);
            if (mag >= tol) report.failures.push_back({AopCondition::A3, -1, s, mag});
        }
    }
    report.holds = report.failures.empty();
    return report;
}

// Block of d equal-length sequences feeding the construction. Validates on
// creation: shared length m, shared value domain, and m ≡ 0 (mod d).
template <class S>
struct SequenceBlock {
    std::vector<S> sequences;

    SequenceBlock() = default;
    explicit SequenceBlock(std::vector<S> seqs) : sequences(std::move(seqs)) {
        if (sequences.empty()) throw Error("block needs at least one sequence");
        const std::size_t m = sequences.front().size();
        if (m == 0) throw Error("block sequences must be non-empty");
        for (const auto& s : sequences) {
            if (s.size() != m)
                throw DimensionMismatchError("block sequences must share one length");
            seq_traits<S>::require_same_domain(sequences.front(), s);
        }
        if (m % sequences.size() != 0)
            throw DivisorError("block length " + std::to_string(m) +
                               " is not a multiple of the block size " +
                               std::to_string(sequences.size()));
    }

    int d() const { return static_cast<int>(sequences.size()); }
    int m() const { return static_cast<int>(sequences.front().size()); }
    int w() const { return m() / d(); }
};

namespace detail {

inline void skip_spaces(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

inline int parse_int(std::string_view text, std::size_t& pos) {
    skip_spaces(text, pos);
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        throw ParseError("expected an integer", start);
    try {
        return std::stoi(std::string(text.substr(start, pos - start)));
    } catch (const std::out_of_range&) {
        throw ParseError("integer out of range", start);
    }
}

}  // namespace detail

// Parses a comma-separated quaternion sequence. Items are either unit symbols
// from {1, -1, i, -i, j, -j, k, -k} or explicit integer 4-tuples "(w,x,y,z)".
inline QuaternionSequence parse_quaternion_sequence(std::string_view text) {
    QuaternionSequence seq;
    std::size_t pos = 0;
    detail::skip_spaces(text, pos);
    if (pos == text.size()) throw ParseError("empty sequence", pos);
    while (true) {
        detail::skip_spaces(text, pos);
        const std::size_t item_start = pos;
        if (pos == text.size()) throw ParseError("expected an entry", pos);
        if (text[pos] == '(') {
            ++pos;
            Quaternion<int> q;
            q.w = detail::parse_int(text, pos);
            for (int* comp : {&q.x, &q.y, &q.z}) {
                detail::skip_spaces(text, pos);
                if (pos == text.size() || text[pos] != ',')
                    throw ParseError("expected ',' inside tuple", pos);
                ++pos;
                *comp = detail::parse_int(text, pos);
            }
            detail::skip_spaces(text, pos);
            if (pos == text.size() || text[pos] != ')')
                throw ParseError("expected ')' closing tuple", pos);
            ++pos;
            seq.values.push_back(q);
        } else {
            std::size_t end = pos;
            while (end < text.size() && text[end] != ',') ++end;
            std::string token(text.substr(pos, end - pos));
            while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
                token.pop_back();
            pos = end;
            if (token == "1") seq.values.push_back({1, 0, 0, 0});
            else if (token == "-1") seq.values.push_back({-1, 0, 0, 0});
            else if (token == "i") seq.values.push_back({0, 1, 0, 0});
            else if (token == "-i") seq.values.push_back({0, -1, 0, 0});
            else if (token == "j") seq.values.push_back({0, 0, 1, 0});
            else if (token == "-j") seq.values.push_back({0, 0, -1, 0});
            else if (token == "k") seq.values.push_back({0, 0, 0, 1});
            else if (token == "-k") seq.values.push_back({0, 0, 0, -1});
            else throw ParseError("unknown token '" + token + "'", item_start);
        }
        detail::skip_spaces(text, pos);
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ',' between entries", pos);
        ++pos;
    }
    return seq;
}

}  // namespace bcpa
