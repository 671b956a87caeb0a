#include "pms/matching_set.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pms {

const Rational& Distribution::at(const Partition& p) const {
    for (size_t i = 0; i < index.size(); ++i)
        if (index[i] == p) return value[i];
    throw std::invalid_argument("Distribution: unknown partition " + p.str());
}

Rational Distribution::sum() const {
    Rational s = 0;
    for (const Rational& v : value) s += v;
    return s;
}

MatchingSet::MatchingSet(int n, std::vector<Matching> matchings)
    : n_(n), matchings_(std::move(matchings)), cache_mutex_(std::make_unique<std::mutex>()) {
    for (const Matching& m : matchings_)
        if (m.n() != n_) throw std::invalid_argument("MatchingSet: matching on wrong point set");
    std::sort(matchings_.begin(), matchings_.end());
    matchings_.erase(std::unique(matchings_.begin(), matchings_.end()), matchings_.end());
}

MatchingSet::MatchingSet(const MatchingSet& other)
    : n_(other.n_), matchings_(other.matchings_), cache_mutex_(std::make_unique<std::mutex>()) {}

MatchingSet& MatchingSet::operator=(const MatchingSet& other) {
    if (this != &other) {
        n_ = other.n_;
        matchings_ = other.matchings_;
        cache_mutex_ = std::make_unique<std::mutex>();
        inner_.reset();
        dual_.reset();
    }
    return *this;
}

bool MatchingSet::contains(const Matching& m) const {
    return std::binary_search(matchings_.begin(), matchings_.end(), m);
}

const Distribution& MatchingSet::inner_distribution() const {
    if (empty()) throw std::invalid_argument("inner_distribution: empty set");
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    if (inner_) return *inner_;

    Distribution d;
    d.index = partitions_of(n_);
    std::vector<BigInt> pairCount(d.index.size(), BigInt(0));
    std::vector<int> lookupCache;
    auto indexOf = [&](const Partition& p) {
        for (size_t i = 0; i < d.index.size(); ++i)
            if (d.index[i] == p) return static_cast<int>(i);
        throw std::logic_error("inner_distribution: distance outside index");
    };
    // diagonal pairs all sit in the identity relation (1,…,1)
    pairCount.back() = BigInt(static_cast<unsigned long>(size()));
    for (size_t i = 0; i < matchings_.size(); ++i)
        for (size_t j = i + 1; j < matchings_.size(); ++j)
            pairCount[static_cast<size_t>(indexOf(coset_distance(matchings_[i], matchings_[j])))] += 2;

    const BigInt total(static_cast<unsigned long>(size()));
    d.value.reserve(d.index.size());
    for (const BigInt& c : pairCount) d.value.emplace_back(c, total);
    inner_ = std::move(d);
    return *inner_;
}

const Distribution& MatchingSet::dual_distribution(const ZonalTable& table) const {
    if (empty()) throw std::invalid_argument("dual_distribution: empty set");
    if (table.n != n_) throw std::invalid_argument("dual_distribution: table is for a different n");
    const Distribution& inner = inner_distribution();

    std::lock_guard<std::mutex> lock(*cache_mutex_);
    if (dual_) return *dual_;

    Distribution d;
    d.index = table.index;
    d.value.resize(d.index.size());
    const Rational scale(table.points(), BigInt(static_cast<unsigned long>(size())));
    for (size_t m = 0; m < d.index.size(); ++m) {
        Rational s = 0;
        for (size_t r = 0; r < d.index.size(); ++r)
            s += table.omega[m][r] * inner.value[r];
        d.value[m] = s * Rational(BigInt(static_cast<long>(table.degree[m]))) * scale;
    }
    dual_ = std::move(d);
    return *dual_;
}

std::string MatchingSet::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    nlohmann::json list = nlohmann::json::array();
    for (const Matching& m : matchings_) {
        nlohmann::json pairs = nlohmann::json::array();
        for (auto [a, b] : m.pairs()) pairs.push_back(nlohmann::json::array({a, b}));
        list.push_back(std::move(pairs));
    }
    j["matchings"] = std::move(list);
    return j.dump();
}

std::string MatchingSet::to_text() const {
    std::string out;
    for (const Matching& m : matchings_) {
        out += m.str();
        out += '\n';
    }
    return out;
}

namespace {

MatchingSet parse_json(const std::string& content) {
    nlohmann::json j = nlohmann::json::parse(content);
    if (!j.is_object() || !j.contains("n") || !j.contains("matchings"))
        throw std::invalid_argument("matching-set JSON needs keys \"n\" and \"matchings\"");
    const int n = j["n"].get<int>();
    std::vector<Matching> ms;
    for (const auto& entry : j["matchings"]) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& p : entry) {
            if (!p.is_array() || p.size() != 2)
                throw std::invalid_argument("matching pair must be a 2-element array");
            pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
        }
        ms.push_back(Matching::from_pairs(n, pairs));
    }
    return MatchingSet(n, std::move(ms));
}

MatchingSet parse_text(const std::string& content) {
    std::vector<Matching> ms;
    int n = -1;
    std::istringstream in(content);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::vector<std::pair<int, int>> pairs;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            const size_t dash = tok.find('-');
            if (dash == std::string::npos)
                throw std::invalid_argument("line " + std::to_string(lineNo) +
                                            ": expected a-b pair, got '" + tok + "'");
            pairs.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
        }
        if (pairs.empty()) continue;
        if (n == -1) n = static_cast<int>(pairs.size());
        if (static_cast<int>(pairs.size()) != n)
            throw std::invalid_argument("line " + std::to_string(lineNo) +
                                        ": inconsistent matching size");
        ms.push_back(Matching::from_pairs(n, pairs));
    }
    if (n == -1) throw std::invalid_argument("no matchings in text input");
    return MatchingSet(n, std::move(ms));
}

}  // namespace

MatchingSet MatchingSet::parse(const std::string& content) {
    for (char ch : content) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (ch == '{') return parse_json(content);
        break;
    }
    return parse_text(content);
}

MatchingSet MatchingSet::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void MatchingSet::save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << to_json() << '\n';
}

Distribution inner_distribution(const MatchingSet& z) { return z.inner_distribution(); }

Distribution dual_distribution(const MatchingSet& z, const ZonalTable& table) {
    return z.dual_distribution(table);
}

}  // namespace pms
