// pms — command-line front end for the perfect-matching scheme engine.
//
// Exit codes: 0 completed (affirmative verdict), 1 negative verdict
// (no / UNSAT / violations found), 2 usage or input error, 3 aborted or an
// internal cross-check failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pms/constructions.hpp"
#include "pms/factorisation.hpp"
#include "pms/matching_set.hpp"
#include "pms/search.hpp"
#include "pms/zonal.hpp"

namespace {

using nlohmann::json;
using namespace pms;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kAborted = 3;

std::vector<int> parse_point_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ','))
        if (!token.empty()) out.push_back(std::stoi(token));
    return out;
}

void write_output(const std::string& payload, const std::string& outPath) {
    if (outPath.empty() || outPath == "-") {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(outPath, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + outPath);
    f << payload;
    if (payload.empty() || payload.back() != '\n') f << '\n';
}

std::string render(const Rational& value, bool decimal) {
    if (!decimal) return value.str();
    return std::to_string(value.approx());
}

void print_partition_table(std::ostream& os, const std::string& title,
                           const std::vector<Partition>& index,
                           const std::vector<std::vector<Rational>>& rows, bool decimal) {
    std::vector<size_t> width(index.size() + 1, 0);
    std::vector<std::vector<std::string>> cells;
    {
        std::vector<std::string> header{title};
        for (const auto& p : index) header.push_back("(" + p.str() + ")");
        cells.push_back(std::move(header));
    }
    for (size_t m = 0; m < rows.size(); ++m) {
        std::vector<std::string> line{"(" + index[m].str() + ")"};
        for (const auto& v : rows[m]) line.push_back(render(v, decimal));
        cells.push_back(std::move(line));
    }
    for (const auto& line : cells)
        for (size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    for (const auto& line : cells) {
        for (size_t c = 0; c < line.size(); ++c) {
            os << (c ? "  " : "");
            os.width(static_cast<std::streamsize>(width[c]));
            os << line[c];
        }
        os << '\n';
    }
}

int cmd_enumerate(int n, bool list, bool asText) {
    std::cout << "perfect matchings of K_" << 2 * n << ": " << matching_count(n).get_str() << '\n';
    if (list) {
        const MatchingSet everything = full_set(n);
        std::cout << (asText ? everything.to_text() : everything.to_json() + "\n");
    }
    return kOk;
}

int cmd_spectrum(int n, bool withPQ, const std::string& jsonPath, bool decimal, int threads) {
    const ZonalTable table = zonal_table(n, threads);
    print_partition_table(std::cout, "omega", table.index, table.omega, decimal);
    std::cout << "valency";
    for (const auto& k : table.valency) std::cout << "  " << k.get_str();
    std::cout << "\ndegree ";
    for (long long d : table.degree) std::cout << "  " << d;
    std::cout << '\n';
    std::optional<EigenMatrices> em;
    if (withPQ) {
        em = eigenvalue_matrices(table);
        print_partition_table(std::cout, "P", table.index, em->p, decimal);
        print_partition_table(std::cout, "Q", table.index, em->q, decimal);
    }
    if (!jsonPath.empty()) {
        json j;
        j["n"] = n;
        for (const auto& p : table.index) j["partitions"].push_back(p.str());
        for (const auto& row : table.omega) {
            json r = json::array();
            for (const auto& v : row) r.push_back(v.str());
            j["omega"].push_back(std::move(r));
        }
        for (const auto& k : table.valency) j["valency"].push_back(k.get_str());
        for (long long d : table.degree) j["degree"].push_back(d);
        if (em) {
            for (const auto& row : em->p) {
                json r = json::array();
                for (const auto& v : row) r.push_back(v.str());
                j["p"].push_back(std::move(r));
            }
            for (const auto& row : em->q) {
                json r = json::array();
                for (const auto& v : row) r.push_back(v.str());
                j["q"].push_back(std::move(r));
            }
        }
        write_output(j.dump(2), jsonPath);
    }
    return kOk;
}

int cmd_check(const std::string& file, const std::string& lambdaText, const std::string& method,
              int threads) {
    const MatchingSet d = MatchingSet::load_file(file);
    const Partition lambda = Partition::parse(lambdaText);
    if (lambda.size() != d.n())
        throw std::invalid_argument("lambda must be a partition of n = " + std::to_string(d.n()));

    std::optional<FactorisationReport> byDef;
    std::optional<bool> byDesign;
    if (method == "definition" || method == "both") byDef = check_by_definition(d, lambda);
    if (method == "design" || method == "both")
        byDesign = check_by_design(d, lambda, zonal_table(d.n(), threads));

    if (byDef && byDesign && byDef->is_factorisation != *byDesign) {
        std::cerr << "internal disagreement between the two checkers; please report\n"
                  << "  lambda = " << lambda.str() << ", |D| = " << d.size() << '\n'
                  << "  definition: " << (byDef->is_factorisation ? "yes" : "no")
                  << ", design: " << (*byDesign ? "yes" : "no") << '\n'
                  << d.to_json() << '\n';
        return kAborted;
    }

    const bool yes = byDef ? byDef->is_factorisation : *byDesign;
    if (yes) {
        std::cout << "yes: a " << lambda.str() << "-factorisation";
        if (byDef) std::cout << " of index " << byDef->index;
        std::cout << " (size " << d.size() << ")\n";
        return kOk;
    }
    std::cout << "no: not a " << lambda.str() << "-factorisation\n";
    if (byDef && byDef->witness) {
        std::cout << "witness partition covered " << byDef->witness_count << " times:";
        for (const auto& block : byDef->witness->blocks) {
            std::cout << " {";
            for (size_t i = 0; i < block.size(); ++i) std::cout << (i ? "," : "") << block[i];
            std::cout << "}";
        }
        std::cout << '\n';
    }
    return kNegative;
}

int cmd_screen(const std::string& lambdaText, long long index) {
    const Partition lambda = Partition::parse(lambdaText);
    const auto violations = feasibility_screen(lambda, BigInt(static_cast<long>(index)));
    if (violations.empty()) {
        std::cout << "not ruled out: " << lambda.str() << " at index " << index
                  << " (existence is NOT implied)\n";
        return kOk;
    }
    for (const auto& v : violations)
        std::cout << "violated [" << v.rule << "] at sub-shape (" << v.shape.str()
                  << "): " << v.detail << '\n';
    return kNegative;
}

int cmd_table(const std::string& pattern, const std::string& range, long long index) {
    // pattern tokens: "n-<k>", "<int>", or "1*" (pad with ones up to size n)
    std::vector<std::string> tokens;
    {
        std::istringstream in(pattern);
        std::string t;
        while (std::getline(in, t, ',')) tokens.push_back(t);
    }
    const auto dots = range.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("range must look like 4..30");
    const int lo = std::stoi(range.substr(0, dots));
    const int hi = std::stoi(range.substr(dots + 2));

    std::vector<int> feasible;
    for (int n = lo; n <= hi; ++n) {
        std::vector<int> parts;
        bool padOnes = false;
        bool valid = true;
        for (const auto& tok : tokens) {
            if (tok == "1*") {
                padOnes = true;
            } else if (tok.rfind("n-", 0) == 0) {
                parts.push_back(n - std::stoi(tok.substr(2)));
            } else if (tok == "n") {
                parts.push_back(n);
            } else {
                parts.push_back(std::stoi(tok));
            }
        }
        int sum = 0;
        for (int p : parts) {
            if (p < 1) valid = false;
            sum += p;
        }
        if (padOnes)
            while (sum < n) {
                parts.push_back(1);
                ++sum;
            }
        if (!valid || sum != n) {
            std::cout << n << ": skipped (pattern does not give a partition of " << n << ")\n";
            continue;
        }
        std::sort(parts.rbegin(), parts.rend());
        const Partition lambda(parts);
        const auto violations = feasibility_screen(lambda, BigInt(static_cast<long>(index)));
        if (violations.empty()) {
            feasible.push_back(n);
            std::cout << n << ": not ruled out (" << lambda.str() << ")\n";
        } else {
            std::cout << n << ": ruled out (" << lambda.str() << ", " << violations.front().rule
                      << " at (" << violations.front().shape.str() << "))\n";
        }
    }
    std::cout << "feasible n:";
    for (int n : feasible) std::cout << ' ' << n;
    std::cout << '\n';
    return kOk;
}

int cmd_construct(const std::string& family, int n, int a, const std::string& outPath,
                  bool asText) {
    std::optional<MatchingSet> d;
    if (family == "roundrobin") d = round_robin(n);
    else if (family == "full") d = full_set(n);
    else if (family == "hyperoval") d = hyperoval_factorisation(a);
    else if (family == "agl11") d = agl11_factorisation();
    else throw std::invalid_argument("unknown family " + family);
    write_output(asText ? d->to_text() : d->to_json(), outPath);
    return kOk;
}

int cmd_derive(const std::string& file, const std::string& atText, const std::string& outPath) {
    const MatchingSet d = MatchingSet::load_file(file);
    const MatchingSet derived = derive(d, parse_point_list(atText));
    write_output(derived.to_json(), outPath);
    std::cerr << "derived set: " << derived.size() << " matchings on " << 2 * derived.n()
              << " points\n";
    return kOk;
}

int cmd_dual(const std::string& file, bool decimal, int threads) {
    const MatchingSet d = MatchingSet::load_file(file);
    const ZonalTable table = zonal_table(d.n(), threads);
    const Distribution& dual = d.dual_distribution(table);
    std::vector<std::string> support;
    for (size_t m = 0; m < dual.index.size(); ++m) {
        std::cout << "a'(" << dual.index[m].str() << ") = " << render(dual.value[m], decimal)
                  << '\n';
        if (!dual.value[m].is_zero() && dual.index[m].length() > 1)
            support.push_back(dual.index[m].str());
    }
    std::cout << "dual degree set:";
    for (const auto& s : support) std::cout << " (" << s << ")";
    std::cout << '\n';
    return kOk;
}

int cmd_search(int n, const std::string& lambdaText, long long index, bool forceBase,
               const std::string& seedFile, const std::string& atText, long long nodeLimit,
               bool enumerateAll, int threads, bool stretch) {
    const Partition lambda = Partition::parse(lambdaText);
    if (lambda.size() != n)
        throw std::invalid_argument("lambda must be a partition of n");

    // The n=6 (3,1,1,1) search space is far beyond desk scale unseeded;
    // require the explicit flag and a derivation seed.
    if (n == 6 && lambda == Partition{3, 1, 1, 1}) {
        if (!stretch)
            throw std::invalid_argument("this search needs --stretch (and a derivation seed)");
        if (seedFile.empty())
            throw std::invalid_argument("--stretch requires --seed FILE --at S");
    }

    const ConstraintSystem system = build_system(n, lambda, index);
    SearchOptions options;
    options.force_base = forceBase;
    options.node_limit = nodeLimit;
    options.enumerate_all = enumerateAll;
    options.threads = threads;
    if (!seedFile.empty()) {
        const MatchingSet dSub = MatchingSet::load_file(seedFile);
        options.pins = seed_from_derivation(system, dSub, parse_point_list(atText));
    }

    const SearchOutcome outcome = solve(system, options);
    json j;
    j["status"] = outcome.status == SearchStatus::SAT
                      ? "SAT"
                      : (outcome.status == SearchStatus::UNSAT ? "UNSAT" : "ABORTED");
    j["statistics"] = {{"nodes", outcome.stats.nodes},
                       {"propagations", outcome.stats.propagations},
                       {"solutions", outcome.stats.solutions},
                       {"wall_seconds", outcome.stats.wall_seconds}};
    if (outcome.solution) j["solution"] = json::parse(outcome.solution->to_json());
    std::cout << j.dump(2) << '\n';
    switch (outcome.status) {
        case SearchStatus::SAT: return kOk;
        case SearchStatus::UNSAT: return kNegative;
        case SearchStatus::ABORTED: return kAborted;
    }
    return kAborted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational engine for the association scheme of perfect matchings of K_2n"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for table building and search");

    auto* enumerateCmd = app.add_subcommand("enumerate", "matching counts and listings");
    int enumN = 3;
    bool enumList = false, enumText = false;
    enumerateCmd->add_option("--n", enumN, "half the number of points")->required();
    enumerateCmd->add_flag("--list", enumList, "list all matchings");
    enumerateCmd->add_flag("--text", enumText, "use the plain-text format");

    auto* spectrumCmd = app.add_subcommand("spectrum", "zonal spherical function and eigenvalue tables");
    int specN = 3;
    bool specPQ = false, specDecimal = false;
    std::string specJson;
    spectrumCmd->add_option("--n", specN)->required();
    spectrumCmd->add_flag("--pq", specPQ, "also print P and Q");
    spectrumCmd->add_option("--json", specJson, "write a JSON mirror to this path ('-' = stdout)");
    spectrumCmd->add_flag("--decimal", specDecimal, "render decimal approximations (display only)");

    auto* checkCmd = app.add_subcommand("check", "factorisation verdict for a matching-set file");
    std::string checkFile, checkLambda, checkMethod = "both";
    checkCmd->add_option("--file", checkFile)->required();
    checkCmd->add_option("--lambda", checkLambda)->required();
    checkCmd->add_option("--method", checkMethod)
        ->check(CLI::IsMember({"definition", "design", "both"}));

    auto* screenCmd = app.add_subcommand("screen", "divisibility/feasibility screen for (lambda, index)");
    std::string screenLambda;
    long long screenIndex = 1;
    screenCmd->add_option("--lambda", screenLambda)->required();
    screenCmd->add_option("--index", screenIndex);

    auto* tableCmd = app.add_subcommand("table", "screen a lambda-pattern over a range of n");
    std::string tablePattern, tableRange;
    long long tableIndex = 1;
    tableCmd->add_option("--pattern", tablePattern, "e.g. \"n-2,2\" or \"n-3,1*\"")->required();
    tableCmd->add_option("--range", tableRange, "e.g. 4..30")->required();
    tableCmd->add_option("--index", tableIndex);

    auto* constructCmd = app.add_subcommand("construct", "emit a known construction");
    std::string family, constructOut;
    int constructN = 3, constructA = 3;
    bool constructText = false;
    constructCmd->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"roundrobin", "full", "hyperoval", "agl11"}));
    constructCmd->add_option("--n", constructN);
    constructCmd->add_option("--a", constructA);
    constructCmd->add_option("--out", constructOut, "output path (default stdout)");
    constructCmd->add_flag("--text", constructText);

    auto* deriveCmd = app.add_subcommand("derive", "derivation of a matching-set file at a point set");
    std::string deriveFile, deriveAt, deriveOut;
    deriveCmd->add_option("--file", deriveFile)->required();
    deriveCmd->add_option("--at", deriveAt, "comma-separated points, e.g. 11,12")->required();
    deriveCmd->add_option("--out", deriveOut);

    auto* dualCmd = app.add_subcommand("dual", "dual distribution of a matching-set file");
    std::string dualFile;
    bool dualDecimal = false;
    dualCmd->add_option("--file", dualFile)->required();
    dualCmd->add_flag("--decimal", dualDecimal);

    auto* searchCmd = app.add_subcommand("search", "exact-cover search for a lambda-factorisation");
    int searchN = 3;
    std::string searchLambda, searchSeed, searchAt;
    long long searchIndex = 1, searchNodeLimit = -1;
    bool searchForceBase = false, searchEnumerate = false, searchStretch = false;
    searchCmd->add_option("--n", searchN)->required();
    searchCmd->add_option("--lambda", searchLambda)->required();
    searchCmd->add_option("--index", searchIndex);
    searchCmd->add_flag("--force-base", searchForceBase, "pin the base matching (symmetry breaking)");
    searchCmd->add_option("--seed", searchSeed, "matching-set file the derivation must equal");
    searchCmd->add_option("--at", searchAt, "points of the derivation set S");
    searchCmd->add_option("--node-limit", searchNodeLimit);
    searchCmd->add_flag("--enumerate-all", searchEnumerate);
    searchCmd->add_flag("--stretch", searchStretch, "allow the seeded n=6 (3,1,1,1) reproduction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*enumerateCmd) return cmd_enumerate(enumN, enumList, enumText);
        if (*spectrumCmd) return cmd_spectrum(specN, specPQ, specJson, specDecimal, threads);
        if (*checkCmd) return cmd_check(checkFile, checkLambda, checkMethod, threads);
        if (*screenCmd) return cmd_screen(screenLambda, screenIndex);
        if (*tableCmd) return cmd_table(tablePattern, tableRange, tableIndex);
        if (*constructCmd)
            return cmd_construct(family, constructN, constructA, constructOut, constructText);
        if (*deriveCmd) return cmd_derive(deriveFile, deriveAt, deriveOut);
        if (*dualCmd) return cmd_dual(dualFile, dualDecimal, threads);
        if (*searchCmd)
            return cmd_search(searchN, searchLambda, searchIndex, searchForceBase, searchSeed,
                              searchAt, searchNodeLimit, searchEnumerate, threads, searchStretch);
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kAborted;
    }
    return kUsage;
}
