// Command-line front end: generate perfect arrays, verify their correlation
// properties, correlate pairs, and emit family reports.
//
// Exit codes: 0 success/verified, 1 verification failed, 2 usage or IO error.

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "bcpa/bcpa.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct BlockItem {
    enum class Kind { Identity, Decimate, Rotate, File } kind = Kind::Identity;
    long long arg = 0;
    std::string path;
};

std::vector<BlockItem> parse_block_spec(const std::string& spec) {
    std::vector<BlockItem> items;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "id") {
            items.push_back({BlockItem::Kind::Identity, 0, {}});
        } else if (item.rfind("dec:", 0) == 0) {
            items.push_back({BlockItem::Kind::Decimate, std::stoll(item.substr(4)), {}});
        } else if (item.rfind("rot:", 0) == 0) {
            items.push_back({BlockItem::Kind::Rotate, std::stoll(item.substr(4)), {}});
        } else if (item.rfind("file:", 0) == 0) {
            items.push_back({BlockItem::Kind::File, 0, item.substr(5)});
        } else {
            throw bcpa::ParseError("bad block item '" + item +
                                   "' (expected id, dec:T, rot:S or file:PATH)");
        }
    }
    if (items.empty()) throw bcpa::ParseError("block spec is empty");
    return items;
}

// "--k 0" or "--k 1..9"
std::vector<long long> parse_k_range(const std::string& spec) {
    const auto dots = spec.find("..");
    if (dots == std::string::npos) return {std::stoll(spec)};
    const long long lo = std::stoll(spec.substr(0, dots));
    const long long hi = std::stoll(spec.substr(dots + 2));
    if (hi < lo) throw bcpa::ParseError("bad k range '" + spec + "'");
    std::vector<long long> ks;
    for (long long k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
}

// A base file is JSON if it starts with '{'; anything else is the quaternion
// token form accepted by parse_quaternion_sequence.
bcpa::AnySequence load_base_sequence(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw bcpa::Error("cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return bcpa::sequence_from_json(nlohmann::json::parse(text));
    return bcpa::parse_quaternion_sequence(text);
}

// components below the default tolerance print as zero, like the values
std::string format_value(const std::complex<double>& v) {
    const double re = std::abs(v.real()) < bcpa::kDefaultTol ? 0.0 : v.real();
    const double im = std::abs(v.imag()) < bcpa::kDefaultTol ? 0.0 : v.imag();
    std::ostringstream os;
    os << re;
    if (im >= 0) os << '+';
    os << im << 'i';
    return os.str();
}

std::string format_value(const bcpa::Quaternion<double>& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string format_shift(const std::vector<int>& shift) {
    std::string out = "[";
    for (std::size_t i = 0; i < shift.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(shift[i]);
    }
    return out + "]";
}

struct GenOptions {
    int frank_order = 0;
    std::string base_path;
    std::string block_spec;
    std::string k_spec = "0";
    int dims = 2;
    double tol = bcpa::kDefaultTol;
    bool no_strict = false;
    std::string out = "array.json";
    std::string emit_base;
};

template <class S>
void run_gen_typed(const S& base, const std::vector<BlockItem>& items, const GenOptions& opt,
                   const std::vector<long long>& ks) {
    std::vector<S> block_seqs;
    for (const auto& item : items) {
        switch (item.kind) {
            case BlockItem::Kind::Identity: block_seqs.push_back(base); break;
            case BlockItem::Kind::Decimate:
                block_seqs.push_back(bcpa::decimate(base, static_cast<int>(item.arg)));
                break;
            case BlockItem::Kind::Rotate:
                block_seqs.push_back(bcpa::rotate_right(base, item.arg));
                break;
            case BlockItem::Kind::File: {
                auto loaded = bcpa::load_sequence(item.path);
                if (!std::holds_alternative<S>(loaded))
                    throw bcpa::DomainMismatchError("block file " + item.path +
                                                    " is not in the base sequence's domain");
                block_seqs.push_back(std::get<S>(std::move(loaded)));
                break;
            }
        }
    }
    bcpa::SequenceBlock<S> block(std::move(block_seqs));
    std::printf("base: length %zu; block: d=%d m=%d w=%d; dims=%d\n", base.size(), block.d(),
                block.m(), block.w(), opt.dims);

    if (!opt.no_strict) {
        bcpa::check_construction_preconditions(base, block, opt.tol);
        std::printf("preconditions: base perfect, orthogonality holds for d=%d, block perfect\n",
                    block.d());
    }

    const fs::path out_path(opt.out);
    for (const long long k : ks) {
        const auto array = bcpa::construct_nd<S>({base, block, k, opt.dims, false, opt.tol});
        fs::path target = out_path;
        if (ks.size() > 1) {
            target = out_path.parent_path() /
                     (out_path.stem().string() + "_k" + std::to_string(k) +
                      out_path.extension().string());
        }
        bcpa::save_json(target, bcpa::array_to_json(array));
        std::string shape;
        for (int d : array.cells.dims()) shape += (shape.empty() ? "" : "x") + std::to_string(d);
        std::printf("k=%lld: wrote %s (%s, %zu cells)\n", k, target.string().c_str(),
                    shape.c_str(), array.cells.size());
    }
}

int run_gen(const GenOptions& opt) {
    bcpa::AnySequence base;
    if (opt.frank_order > 0)
        base = bcpa::frank(opt.frank_order);
    else if (!opt.base_path.empty())
        base = load_base_sequence(opt.base_path);
    else
        throw bcpa::ParseError("gen needs --frank R or --base FILE");

    if (!opt.emit_base.empty())
        std::visit(
            [&](const auto& s) { bcpa::save_json(opt.emit_base, bcpa::sequence_to_json(s)); },
            base);

    const auto items = parse_block_spec(opt.block_spec);
    const auto ks = parse_k_range(opt.k_spec);
    std::visit([&](const auto& s) { run_gen_typed(s, items, opt, ks); }, base);
    return kExitOk;
}

struct VerifyOptions {
    std::vector<std::string> paths;
    double tol = bcpa::kDefaultTol;
    double rel_tol = 0.0;
    bool no_fast = false;
    int d = 0;  // 0: no pairwise expectation enforced
};

template <class A>
bool verify_single(const A& array, const VerifyOptions& opt, const std::string& label) {
    const auto res = bcpa::correlate(array, array, opt.tol, !opt.no_fast, opt.rel_tol);
    const auto census = bcpa::nonzero_census(res);
    bool perfect = census.count == 1;
    if (perfect)
        for (int s : census.entries.front().shift)
            if (s != 0) perfect = false;
    std::printf("%s: perfect: %s, nonzero autocorrelation values: %zu\n", label.c_str(),
                perfect ? "yes" : "no", census.count);
    if (!perfect)
        for (const auto& e : census.entries) {
            bool zero_shift = true;
            for (int s : e.shift) zero_shift = zero_shift && s == 0;
            if (!zero_shift) {
                std::printf("  first failing shift: %s value %s\n",
                            format_shift(e.shift).c_str(), format_value(e.value).c_str());
                break;
            }
        }
    return perfect;
}

int run_verify(const VerifyOptions& opt) {
    std::vector<bcpa::AnyArray> arrays;
    for (const auto& p : opt.paths) arrays.push_back(bcpa::load_array(p));

    bool ok = true;
    for (std::size_t i = 0; i < arrays.size(); ++i)
        ok = std::visit([&](const auto& a) { return verify_single(a, opt, opt.paths[i]); },
                        arrays[i]) &&
             ok;

    if (arrays.size() > 1) {
        std::printf("pairwise nonzero cross-correlation counts (%zu files):\n", arrays.size());
        const std::size_t expected =
            opt.d > 0 ? static_cast<std::size_t>(opt.d) * static_cast<std::size_t>(opt.d) : 0;
        bool grid_ok = true;
        for (std::size_t p = 0; p < arrays.size(); ++p) {
            std::string row;
            for (std::size_t q = 0; q < arrays.size(); ++q) {
                const std::size_t count = std::visit(
                    [&](const auto& a) -> std::size_t {
                        using T = std::decay_t<decltype(a)>;
                        if (!std::holds_alternative<T>(arrays[q]))
                            throw bcpa::DomainMismatchError("cannot correlate " + opt.paths[p] +
                                                            " with " + opt.paths[q]);
                        const auto res = bcpa::correlate(a, std::get<T>(arrays[q]), opt.tol,
                                                         !opt.no_fast, opt.rel_tol);
                        return bcpa::nonzero_census(res).count;
                    },
                    arrays[p]);
                row += (q ? " " : "") + std::to_string(count);
                if (p != q && expected > 0 && count != expected) grid_ok = false;
            }
            std::printf("  %s\n", row.c_str());
        }
        if (expected > 0)
            std::printf("expected off-diagonal count d^2 = %zu: %s\n", expected,
                        grid_ok ? "satisfied" : "violated");
        ok = ok && grid_ok;
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

struct CorrelateOptions {
    std::string path_a, path_b;
    double tol = bcpa::kDefaultTol;
    double rel_tol = 0.0;
    bool fast = false;
    std::string out;
};

template <class A>
int correlate_typed(const A& a, const A& b, const CorrelateOptions& opt) {
    bool fast = opt.fast;
    if (fast && std::is_same_v<A, bcpa::QuaternionArray>) {
        std::fprintf(stderr, "note: transform path unsupported for quaternions; using direct\n");
        fast = false;
    }
    const auto res = bcpa::correlate(a, b, opt.tol, fast, opt.rel_tol);
    const auto census = bcpa::nonzero_census(res);
    std::printf("nonzero: %zu of %zu shifts (tol %g)\n", census.count, res.values.size(),
                res.effective_tol());
    for (const auto& e : census.entries)
        std::printf("shift %s  %s\n", format_shift(e.shift).c_str(),
                    format_value(e.value).c_str());
    if (!opt.out.empty()) {
        bcpa::save_json(opt.out, bcpa::correlation_to_json(res));
        std::printf("wrote %s\n", opt.out.c_str());
    }
    return kExitOk;
}

int run_correlate(const CorrelateOptions& opt) {
    auto a = bcpa::load_array(opt.path_a);
    auto b = bcpa::load_array(opt.path_b);
    if (a.index() != b.index())
        throw bcpa::DomainMismatchError("cannot correlate arrays from different value domains");
    return std::visit(
        [&](const auto& lhs) {
            using T = std::decay_t<decltype(lhs)>;
            return correlate_typed(lhs, std::get<T>(b), opt);
        },
        a);
}

struct ReportOptions {
    std::vector<std::string> paths;
    int d = 1;
    double tol = bcpa::kDefaultTol;
    double rel_tol = 0.0;
    bool no_fast = false;
    std::string out;
};

template <class A>
int report_typed(std::vector<bcpa::AnyArray>& arrays, const ReportOptions& opt) {
    bcpa::ArrayFamily<A> family;
    family.d = opt.d;
    for (std::size_t i = 0; i < arrays.size(); ++i) {
        if (!std::holds_alternative<A>(arrays[i]))
            throw bcpa::DomainMismatchError("family members mix value domains");
        family.ks.push_back(static_cast<long long>(i));
        family.members.push_back(std::get<A>(std::move(arrays[i])));
    }
    const auto report = bcpa::zcz_report(family, opt.tol, !opt.no_fast, opt.rel_tol);
    std::printf("family: %zu members, %zu cells each, d=%d, zone ratio %g\n",
                family.members.size(), report.cells, report.d, report.zone_ratio);
    for (const auto& pair : report.pairs)
        std::printf("pair (%lld,%lld): nonzero %zu, peak %g\n", pair.k1, pair.k2,
                    pair.nonzero_count, pair.peak);
    if (!opt.out.empty()) {
        bcpa::save_json(opt.out, bcpa::zcz_report_to_json(report));
        std::printf("wrote %s\n", opt.out.c_str());
    }
    return kExitOk;
}

int run_report(const ReportOptions& opt) {
    std::vector<bcpa::AnyArray> arrays;
    for (const auto& p : opt.paths) arrays.push_back(bcpa::load_array(p));
    if (arrays.front().index() == 0) return report_typed<bcpa::RootArray>(arrays, opt);
    return report_typed<bcpa::QuaternionArray>(arrays, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-circulant perfect array toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "construct arrays and write them as JSON");
    gen_cmd->add_option("--frank", gen.frank_order, "use the Frank sequence of this root order");
    gen_cmd->add_option("--base", gen.base_path, "base sequence file (JSON or quaternion tokens)");
    gen_cmd->add_option("--block", gen.block_spec,
                        "comma list of block transforms: id, dec:T, rot:S, file:PATH")
        ->required();
    gen_cmd->add_option("--k", gen.k_spec, "family parameter, one value or a range A..B");
    gen_cmd->add_option("--dims", gen.dims, "number of array dimensions")->check(CLI::Range(2, 16));
    gen_cmd->add_option("--tol", gen.tol, "tolerance for precondition checks");
    gen_cmd->add_flag("--no-strict", gen.no_strict, "skip precondition checks");
    gen_cmd->add_option("--out,-o", gen.out, "output path (suffixed _kN for ranges)");
    gen_cmd->add_option("--emit-base", gen.emit_base, "also write the base sequence JSON here");

    VerifyOptions verify;
    auto* verify_cmd =
        app.add_subcommand("verify", "check perfectness and pairwise correlation counts");
    verify_cmd->add_option("files", verify.paths, "array JSON files")->required();
    verify_cmd->add_option("--tol", verify.tol, "chop tolerance");
    verify_cmd->add_option("--rel-tol", verify.rel_tol, "chop tolerance as a fraction of M");
    verify_cmd->add_flag("--no-fast", verify.no_fast, "force the direct correlation path");
    verify_cmd->add_option("--d", verify.d, "enforce d^2 nonzero values on distinct pairs");

    CorrelateOptions corr;
    auto* corr_cmd = app.add_subcommand("correlate", "cross-correlate two arrays");
    corr_cmd->add_option("a", corr.path_a, "first array file")->required();
    corr_cmd->add_option("b", corr.path_b, "second array file")->required();
    corr_cmd->add_option("--tol", corr.tol, "chop tolerance");
    corr_cmd->add_option("--rel-tol", corr.rel_tol, "chop tolerance as a fraction of M");
    corr_cmd->add_flag("--fast", corr.fast, "use the transform correlation path");
    corr_cmd->add_option("--out,-o", corr.out, "write the sparse correlation JSON here");

    ReportOptions report;
    auto* report_cmd = app.add_subcommand("report", "full pairwise family report");
    report_cmd->add_option("files", report.paths, "array JSON files")->required();
    report_cmd->add_option("--d", report.d, "family divisor d")->required();
    report_cmd->add_option("--tol", report.tol, "chop tolerance");
    report_cmd->add_option("--rel-tol", report.rel_tol, "chop tolerance as a fraction of M");
    report_cmd->add_flag("--no-fast", report.no_fast, "force the direct correlation path");
    report_cmd->add_option("--out,-o", report.out, "write the report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (corr_cmd->parsed()) return run_correlate(corr);
        if (report_cmd->parsed()) return run_report(report);
    } catch (const bcpa::StrictModeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
