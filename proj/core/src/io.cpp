#include "cdc/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace cdc {

namespace {

using nlohmann::json;

std::string next_line(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw ParseError("code file: unexpected end of input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

// Header line "key v0 v1 ...": returns the values, insists on the key.
std::vector<long> header_values(const std::string& line,
                                const std::string& key) {
    std::istringstream ss(line);
    std::string word;
    if (!(ss >> word) || word != key)
        throw ParseError("code file: expected '" + key + "' line");
    std::vector<long> vals;
    long v;
    while (ss >> v) vals.push_back(v);
    if (!ss.eof())
        throw ParseError("code file: bad value on '" + key + "' line");
    if (vals.empty())
        throw ParseError("code file: missing value on '" + key + "' line");
    return vals;
}

long header_value(const std::string& line, const std::string& key) {
    auto vals = header_values(line, key);
    if (vals.size() != 1)
        throw ParseError("code file: expected one value on '" + key +
                         "' line");
    return vals[0];
}

}  // namespace

void write_code_file(std::ostream& os, const SubspaceCode& code) {
    os << "cdcfile 1\n";
    os << "q " << code.q << "\n";
    if (code.field->degree() > 1) {
        os << "modulus";
        for (uint32_t c : code.field->modulus()) os << ' ' << c;
        os << "\n";
    }
    os << "n " << code.n << "\n";
    os << "k " << code.k << "\n";
    os << "d " << code.d << "\n";
    os << "count " << code.words.size() << "\n";
    os << "construction " << code.construction << "\n";
    for (const Subspace& w : code.words) {
        os << "\n";
        const Mat& b = w.basis();
        for (int r = 0; r < b.rows(); ++r) {
            for (int c = 0; c < b.cols(); ++c) {
                if (c) os << ' ';
                os << b.at(r, c);
            }
            os << "\n";
        }
    }
}

SubspaceCode read_code_file(std::istream& is) {
    if (header_value(next_line(is), "cdcfile") != 1)
        throw ParseError("code file: unsupported version");
    long q = header_value(next_line(is), "q");
    uint32_t p = 0, e = 0;
    if (q < 2 || q > 512 || !factor_prime_power((uint32_t)q, p, e))
        throw ParseError("code file: q is not a prime power in [2, 512]");
    FieldPtr field = make_field((uint32_t)q);

    std::string line = next_line(is);
    if (e > 1) {
        auto mod = header_values(line, "modulus");
        std::vector<uint32_t> want = field->modulus();
        bool match = mod.size() == want.size();
        for (size_t i = 0; match && i < mod.size(); ++i)
            match = mod[i] == (long)want[i];
        if (!match)
            throw ParseError("code file: modulus is not the canonical one");
        line = next_line(is);
    }
    long n = header_value(line, "n");
    long k = header_value(next_line(is), "k");
    long d = header_value(next_line(is), "d");
    long count = header_value(next_line(is), "count");
    if (n < 1 || n > 64 || k < 1 || k > n)
        throw ParseError("code file: bad dimensions");
    if (d < 2 || d % 2 != 0 || d > 2 * k)
        throw ParseError("code file: bad distance");
    if (count < 0 || (uint64_t)count > kEnumCap)
        throw ParseError("code file: bad count");

    std::string cons;
    {
        std::istringstream ss(next_line(is));
        std::string key;
        ss >> key;
        if (key != "construction")
            throw ParseError("code file: expected 'construction' line");
        if (!(ss >> cons))
            throw ParseError("code file: missing construction name");
    }

    SubspaceCode code;
    code.q = (uint32_t)q;
    code.n = (int)n;
    code.k = (int)k;
    code.d = (int)d;
    code.construction = cons;
    code.field = field;
    code.words.reserve((size_t)count);
    for (long w = 0; w < count; ++w) {
        if (!next_line(is).empty())
            throw ParseError("code file: expected blank line before word " +
                             std::to_string(w));
        Mat basis(*field, (int)k, (int)n);
        for (long r = 0; r < k; ++r) {
            std::istringstream ss(next_line(is));
            long v;
            for (long c = 0; c < n; ++c) {
                if (!(ss >> v) || v < 0 || v >= q)
                    throw ParseError("code file: bad entry in word " +
                                     std::to_string(w));
                basis.at((int)r, (int)c) = (uint32_t)v;
            }
            if (ss >> v)
                throw ParseError("code file: excess entries in word " +
                                 std::to_string(w));
        }
        Mat reduced = basis;
        std::vector<int> piv;
        int rank = reduced.rref_in_place(&piv);
        if (rank != k || !(reduced == basis))
            throw ParseError(
                "code file: word " + std::to_string(w) +
                " is not a full-rank reduced echelon basis");
        code.words.push_back(Subspace::from_rref(std::move(basis), piv));
    }
    std::string tail;
    while (std::getline(is, tail)) {
        if (!tail.empty() && tail.back() == '\r') tail.pop_back();
        if (!tail.empty())
            throw ParseError("code file: trailing content after last word");
    }
    return code;
}

TableFile read_table_file(std::istream& is) {
    json j;
    try {
        is >> j;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("table file: ") + ex.what());
    }
    try {
        TableFile f;
        f.table = j.at("table").get<int>();
        for (const auto& rj : j.at("rows")) {
            TableRow r;
            r.theorem = rj.at("theorem").get<std::string>();
            r.q = rj.at("q").get<uint32_t>();
            r.n = rj.at("n").get<int>();
            r.k = rj.at("k").get<int>();
            r.delta = rj.at("delta").get<int>();
            r.value = rj.at("value").get<std::string>();
            r.exact = rj.at("exact").get<bool>();
            r.reference = rj.value("reference", false);
            f.rows.push_back(std::move(r));
        }
        return f;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("table file: ") + ex.what());
    }
}

void write_table_file(std::ostream& os, const TableFile& f) {
    json rows = json::array();
    for (const TableRow& r : f.rows) {
        json rj = {{"theorem", r.theorem}, {"q", r.q},
                   {"n", r.n},             {"k", r.k},
                   {"delta", r.delta},     {"value", r.value},
                   {"exact", r.exact}};
        if (r.reference) rj["reference"] = true;
        rows.push_back(std::move(rj));
    }
    json j = {{"table", f.table}, {"rows", std::move(rows)}};
    os << j.dump(2) << "\n";
}

std::string verify_report_json(const VerifyReport& rep) {
    json j = {{"mode", rep.mode},
              {"pass", rep.pass},
              {"required_distance", rep.required_distance},
              {"pairs_checked", rep.pairs_checked},
              {"cross_checked_pairs", rep.cross_checked_pairs},
              {"threads", rep.threads},
              {"seconds", rep.seconds}};
    if (rep.mode == "sampled") {
        j["samples_requested"] = rep.samples_requested;
        j["seed"] = rep.seed;
    }
    if (rep.counterexample) {
        j["counterexample"] = {{"i", rep.counterexample->first},
                               {"j", rep.counterexample->second},
                               {"distance", rep.counterexample_distance}};
    }
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j.dump(2);
}

std::string structure_report_json(const StructureReport& rep) {
    json j = {{"pass", rep.pass}, {"checks", rep.checks}};
    return j.dump(2);
}

}  // namespace cdc
