// Command line front end: bound evaluation, table regeneration and
// checking, code construction, distance verification, and the
// lower/upper ratio sweep.
//
// Exit codes: 0 success, 1 a verification or table check failed, 2 usage
// or malformed input, 3 a bound needs data that was not supplied.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cdc/bounds.hpp"
#include "cdc/constructions.hpp"
#include "cdc/io.hpp"
#include "cdc/verify.hpp"

namespace {

int threads_from_env() {
    const char* s = std::getenv("CDC_THREADS");
    if (!s) return 0;  // auto
    long v = std::strtol(s, nullptr, 10);
    return v >= 1 ? (int)v : 1;
}

struct BoundArgs {
    std::string theorem;
    uint32_t q = 0;
    int n = 0, k = 0, delta = 0;
    std::string aq;
};

struct TableArgs {
    int table = 0;
    std::string golden;
    bool check = false;
    std::string rows;
    std::string out;
};

struct ConstructArgs {
    std::string method;
    uint32_t q = 0;
    int n = 0, k = 0, delta = 0;
    std::string out;
    std::string grmc = "auto";
    uint64_t cap = cdc::kEnumCap;
};

struct VerifyArgs {
    std::string in;
    int min_distance = 0;
    uint64_t samples = 0;
    uint64_t seed = 0x766459;
};

struct RatioArgs {
    uint32_t q = 0;
    int delta_max = 0;
};

void need(bool have, const std::string& what) {
    if (!have)
        throw CLI::ValidationError("bound", "--" + what +
                                                " is required for this theorem");
}

cdc::BoundRecord dispatch_bound(const std::string& theorem, uint32_t q, int n,
                                int k, int delta,
                                std::optional<mpz_class> aq) {
    if (theorem == "parallel") return cdc::bound_parallel(q, n, k, delta);
    if (theorem == "new-3") return cdc::bound_new3(q, n, k, delta);
    if (theorem == "con4") return cdc::bound_con4(q, n, k);
    if (theorem == "cdc45") return cdc::bound_cdc45(q, n);
    if (theorem == "cor2") return cdc::bound_cor2(q, delta);
    if (theorem == "upper")
        return cdc::bound_upper_lifted(q, n, k, delta, std::move(aq));
    if (theorem == "construction-new")
        return cdc::bound_construction_new(q, n, k, delta);
    throw std::invalid_argument("unknown theorem '" + theorem + "'");
}

std::string record_line(const cdc::BoundRecord& r) {
    std::ostringstream os;
    os << r.theorem << " q=" << r.q;
    if (r.n) os << " n=" << r.n;
    if (r.k) os << " k=" << r.k;
    if (r.delta) os << " delta=" << r.delta;
    os << ": " << r.value.get_str();
    if (!r.exact) os << "  [inexact]";
    if (!r.note.empty()) os << "  (" << r.note << ")";
    return os.str();
}

int run_bound(const BoundArgs& a) {
    need(a.q >= 2, "q");
    if (a.theorem == "parallel" || a.theorem == "new-3" ||
        a.theorem == "upper" || a.theorem == "construction-new") {
        need(a.n > 0, "n");
        need(a.k > 0, "k");
        need(a.delta > 0, "delta");
    } else if (a.theorem == "con4") {
        need(a.n > 0, "n");
        need(a.k > 0, "k");
    } else if (a.theorem == "cdc45") {
        need(a.n > 0, "n");
    } else if (a.theorem == "cor2") {
        need(a.delta > 0, "delta");
    }
    std::optional<mpz_class> aq;
    if (!a.aq.empty()) aq = mpz_class(a.aq);
    cdc::BoundRecord rec =
        dispatch_bound(a.theorem, a.q, a.n, a.k, a.delta, std::move(aq));
    std::cout << record_line(rec) << "\n";
    return 0;
}

int run_table(const TableArgs& a) {
    auto keep = [&](const std::string& theorem) {
        return a.rows.empty() || theorem.find(a.rows) != std::string::npos;
    };
    if (a.check) {
        std::string path = a.golden.empty()
                               ? "data/table" + std::to_string(a.table) + ".json"
                               : a.golden;
        std::ifstream is(path);
        if (!is) throw cdc::ParseError("cannot open table file " + path);
        cdc::TableFile golden = cdc::read_table_file(is);
        if (golden.table != a.table)
            throw cdc::ParseError("table file " + path + " holds table " +
                                  std::to_string(golden.table));
        size_t checked = 0, mismatched = 0;
        for (const cdc::TableRow& row : golden.rows) {
            if (row.reference || !keep(row.theorem)) continue;
            cdc::BoundRecord rec = dispatch_bound(row.theorem, row.q, row.n,
                                                  row.k, row.delta, {});
            ++checked;
            if (rec.value.get_str() != row.value || rec.exact != row.exact) {
                ++mismatched;
                std::cout << "MISMATCH " << row.theorem << " q=" << row.q
                          << " n=" << row.n << " k=" << row.k
                          << " delta=" << row.delta << ": file " << row.value
                          << ", recomputed " << rec.value.get_str() << "\n";
            }
        }
        std::cout << "table " << a.table << ": " << checked
                  << " rows checked, " << mismatched << " mismatches\n";
        return mismatched ? 1 : 0;
    }
    std::vector<cdc::BoundRecord> recs = cdc::table_generate(a.table);
    if (!a.out.empty()) {
        cdc::TableFile f;
        f.table = a.table;
        for (const cdc::BoundRecord& r : recs) {
            if (!keep(r.theorem)) continue;
            f.rows.push_back({r.theorem, r.q, r.n, r.k, r.delta,
                              r.value.get_str(), r.exact, false});
        }
        std::ofstream os(a.out);
        if (!os) throw cdc::ParseError("cannot open output file " + a.out);
        cdc::write_table_file(os, f);
        std::cout << "wrote " << f.rows.size() << " rows to " << a.out << "\n";
        return 0;
    }
    for (const cdc::BoundRecord& r : recs)
        if (keep(r.theorem)) std::cout << record_line(r) << "\n";
    return 0;
}

int run_construct(const ConstructArgs& a) {
    if (a.q < 2 || a.n <= 0 || a.k <= 0 || a.delta <= 0)
        throw CLI::ValidationError("construct", "q, n, k, delta are required");

    // Refuse early when the predicted size exceeds the cap; the library
    // enforces its own enumeration cap on top of this.
    cdc::BoundRecord expected;
    if (a.method == "lifted") {
        expected = {"lifted", a.q, a.n, a.k, a.delta,
                    cdc::lifted_size(a.q, a.n, a.k, a.delta), true, ""};
    } else if (a.method == "parallel") {
        expected = cdc::bound_parallel(a.q, a.n, a.k, a.delta);
    } else if (a.method == "comb-mul1") {
        expected = cdc::bound_new3(a.q, a.n, a.k, a.delta);
    } else {
        expected = cdc::bound_construction_new(a.q, a.n, a.k, a.delta);
    }
    if (expected.value > mpz_class(a.cap)) {
        std::cerr << "error: predicted size " << expected.value.get_str()
                  << " exceeds the enumeration cap " << a.cap << "\n";
        return 2;
    }

    bool want_filter = a.k - a.delta >= a.delta;  // auto mode
    if (a.grmc == "filter") want_filter = true;
    if (a.grmc == "coset") want_filter = false;

    cdc::SubspaceCode code;
    if (a.method == "lifted") {
        code = cdc::lift_mrd(a.q, a.n, a.k, a.delta);
    } else if (a.method == "parallel") {
        code = cdc::parallel_construct(
            a.q, a.n, a.k, a.delta,
            want_filter ? cdc::GrmcMode::Filter : cdc::GrmcMode::Coset);
    } else if (a.method == "comb-mul1") {
        if (!want_filter)
            throw std::invalid_argument(
                "comb-mul1 companion has a full window; coset mode does not apply");
        cdc::SubspaceCode base = cdc::mul1_family(a.q, a.n, a.k, a.delta);
        cdc::GrmcCode grmc = cdc::grmc_filter_construct(
            a.q, a.k, a.n - a.k, a.delta, 0, a.k - a.delta);
        code = cdc::comb_construct(base, grmc);
    } else {
        if (!want_filter)
            throw std::invalid_argument(
                "new companion has a full window; coset mode does not apply");
        code = cdc::new_construct(a.q, a.n, a.k, a.delta);
    }

    std::cout << "construction " << code.construction << ": q=" << code.q
              << " n=" << code.n << " k=" << code.k << " d=" << code.d << "\n";
    for (const auto& g : code.groups)
        std::cout << "  " << g.label << ": " << (g.end - g.begin)
                  << " words\n";
    std::cout << "size " << code.size() << "\n";
    std::cout << "bound " << record_line(expected) << "\n";
    mpz_class got((unsigned long)code.size());
    if (got == expected.value)
        std::cout << "size matches the bound\n";
    else if (got > expected.value)
        std::cout << "size exceeds the bound by "
                  << mpz_class(got - expected.value).get_str() << "\n";
    else
        std::cout << "size below the bound by "
                  << mpz_class(expected.value - got).get_str()
                  << " (sampled companion search)\n";

    if (!a.out.empty()) {
        std::ofstream os(a.out);
        if (!os) throw cdc::ParseError("cannot open output file " + a.out);
        cdc::write_code_file(os, code);
        std::cout << "wrote " << a.out << "\n";
    }
    return 0;
}

int run_verify(const VerifyArgs& a) {
    std::ifstream is(a.in);
    if (!is) throw cdc::ParseError("cannot open code file " + a.in);
    cdc::SubspaceCode code = cdc::read_code_file(is);
    int d = a.min_distance > 0 ? a.min_distance : code.d;
    cdc::VerifyReport rep = cdc::verify_cdc(code.words, d, a.samples, a.seed,
                                            threads_from_env());
    std::cout << cdc::verify_report_json(rep) << "\n";
    return rep.pass ? 0 : 1;
}

int run_ratio(const RatioArgs& a) {
    if (a.q < 2 || a.delta_max < 1)
        throw CLI::ValidationError("ratio", "--q and --delta-max are required");
    auto rows = cdc::ratio_table(a.q, a.delta_max);
    mpq_class minr;
    int min_delta = 0;
    for (const auto& r : rows) {
        // Six decimal places, round half up, exact integer arithmetic.
        mpz_class num = r.ratio.get_num(), den = r.ratio.get_den();
        mpz_class scaled = (2 * num * 1000000 + den) / (2 * den);
        std::string digits = scaled.get_str();
        while (digits.size() < 7) digits.insert(digits.begin(), '0');
        std::cout << "delta=" << r.delta << " lower=" << r.lower.get_str()
                  << " upper=" << r.upper.get_str() << " ratio="
                  << digits.substr(0, digits.size() - 6) << "."
                  << digits.substr(digits.size() - 6) << " ("
                  << num.get_str() << "/" << den.get_str() << ")\n";
        if (min_delta == 0 || r.ratio < minr) {
            minr = r.ratio;
            min_delta = r.delta;
        }
    }
    if (min_delta)
        std::cout << "min ratio at delta=" << min_delta << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant dimension code toolkit"};
    app.require_subcommand(1);

    BoundArgs ba;
    CLI::App* bound = app.add_subcommand("bound", "evaluate a size bound");
    bound->add_option("--theorem", ba.theorem, "bound to evaluate")
        ->required()
        ->check(CLI::IsMember({"parallel", "new-3", "con4", "cdc45", "cor2",
                               "upper", "construction-new"}));
    bound->add_option("--q", ba.q, "field size");
    bound->add_option("--n", ba.n, "ambient dimension");
    bound->add_option("--k", ba.k, "codeword dimension");
    bound->add_option("--delta", ba.delta, "half the subspace distance");
    bound->add_option("--aq-term", ba.aq,
                      "size of the complementary-block code the upper bound "
                      "needs when k < 2 delta");

    TableArgs ta;
    CLI::App* table = app.add_subcommand("table", "print or check a table");
    table->add_option("--table", ta.table, "table number")
        ->required()
        ->check(CLI::IsMember({1, 2, 3}));
    table->add_option("--golden", ta.golden,
                      "table file to check (default data/table<N>.json)");
    table->add_flag("--check", ta.check,
                    "recompute every non-reference row of the golden file");
    table->add_option("--rows", ta.rows, "only rows whose theorem contains this");
    table->add_option("--out", ta.out, "write recomputed rows to this file");

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand("construct", "build a code");
    construct->add_option("--method", ca.method, "construction")
        ->required()
        ->check(CLI::IsMember({"lifted", "parallel", "comb-mul1", "new"}));
    construct->add_option("--q", ca.q, "field size")->required();
    construct->add_option("--n", ca.n, "ambient dimension")->required();
    construct->add_option("--k", ca.k, "codeword dimension")->required();
    construct->add_option("--delta", ca.delta, "half the subspace distance")
        ->required();
    construct->add_option("--out", ca.out, "write the code to this file");
    construct->add_option("--grmc", ca.grmc, "companion realization")
        ->check(CLI::IsMember({"auto", "filter", "coset"}));
    construct->add_option("--cap", ca.cap, "refuse sizes above this");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "check pairwise distance");
    verify->add_option("--in", va.in, "code file")->required();
    verify->add_option("--min-distance", va.min_distance,
                       "required distance (default: d from the file)");
    verify->add_option("--sample", va.samples,
                       "number of sampled pairs (0 = exhaustive)");
    verify->add_option("--seed", va.seed, "sampling seed");

    RatioArgs ra;
    CLI::App* ratio =
        app.add_subcommand("ratio", "lower/upper bound ratio sweep");
    ratio->add_option("--q", ra.q, "field size")->required();
    ratio->add_option("--delta-max", ra.delta_max, "largest delta")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (bound->parsed()) return run_bound(ba);
        if (table->parsed()) return run_table(ta);
        if (construct->parsed()) return run_construct(ca);
        if (verify->parsed()) return run_verify(va);
        if (ratio->parsed()) return run_ratio(ra);
    } catch (const cdc::MissingDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cdc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
