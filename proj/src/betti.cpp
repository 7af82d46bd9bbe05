#include "skelbetti/betti.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace skelbetti {

std::string to_string(Convention c) {
    return c == Convention::ring ? "ring" : "ideal";
}

Convention convention_from_string(const std::string& name) {
    if (name == "ring") return Convention::ring;
    if (name == "ideal") return Convention::ideal;
    throw ParseError("unknown convention '" + name + "' (expected ring or ideal)");
}

std::int64_t GradedBetti::at(int i, Mask sigma) const {
    auto it = entries.find({i, sigma});
    return it == entries.end() ? 0 : it->second;
}

std::int64_t BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::int64_t delta) {
    if (delta == 0) return;
    auto [it, inserted] = entries.try_emplace({i, j}, delta);
    if (!inserted) {
        it->second += delta;
        if (it->second == 0) entries.erase(it);
    }
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [key, value] : entries) pd = std::max(pd, key.first);
    return pd;
}

int BettiTable::max_degree() const {
    int j = -1;
    for (const auto& [key, value] : entries) j = std::max(j, key.second);
    return j;
}

BettiTable BettiTable::to_convention(Convention target) const {
    if (target == convention) return *this;
    BettiTable out;
    out.p = p;
    out.convention = target;
    out.n = n;
    if (target == Convention::ideal) {
        for (const auto& [key, value] : entries)
            if (key.first >= 1) out.entries[{key.first - 1, key.second}] = value;
    } else {
        for (const auto& [key, value] : entries)
            out.entries[{key.first + 1, key.second}] = value;
        out.entries[{0, 0}] = 1;
    }
    return out;
}

std::string BettiTable::render_text() const {
    if (entries.empty()) return "(empty table)\n";
    int pd = projective_dimension();
    std::vector<int> rows;
    for (const auto& [key, value] : entries) {
        int r = key.second - key.first;
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end());

    std::size_t width = 1;
    for (const auto& [key, value] : entries)
        width = std::max(width, std::to_string(value).size());
    std::size_t label = std::max<std::size_t>(std::to_string(rows.back()).size(),
                                              std::to_string(rows.front()).size());

    auto cell = [&](const std::string& s) {
        return std::string(width + 1 - std::min(width + 1, s.size() + 1), ' ') + " " + s;
    };
    std::ostringstream os;
    os << std::string(label + 1, ' ');
    for (int c = 0; c <= pd; ++c) os << cell(std::to_string(c));
    os << '\n';
    for (int r : rows) {
        std::string name = std::to_string(r);
        os << std::string(label - name.size(), ' ') << name << ':';
        for (int c = 0; c <= pd; ++c) {
            std::int64_t v = at(c, r + c);
            os << cell(v == 0 ? "." : std::to_string(v));
        }
        os << '\n';
    }
    return os.str();
}

std::string BettiTable::render_csv() const {
    std::ostringstream os;
    os << "i,j,beta\n";
    for (const auto& [key, value] : entries)
        os << key.first << ',' << key.second << ',' << value << '\n';
    return os.str();
}

std::string BettiTable::render_json() const {
    nlohmann::json j;
    j["p"] = p;
    j["convention"] = to_string(convention);
    j["n"] = n;
    auto arr = nlohmann::json::array();
    for (const auto& [key, value] : entries)
        arr.push_back({key.first, key.second, value});
    j["entries"] = arr;
    return j.dump();
}

BettiTable BettiTable::parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    BettiTable t;
    try {
        t.p = j.at("p").get<int>();
        t.convention = convention_from_string(j.at("convention").get<std::string>());
        t.n = j.at("n").get<int>();
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 3)
                throw ParseError("table entry is not a triple [i,j,beta]");
            int i = e[0].get<int>(), deg = e[1].get<int>();
            std::int64_t b = e[2].get<std::int64_t>();
            if (i < 0 || deg < 0 || b < 0)
                throw ParseError("table entry [" + std::to_string(i) + "," +
                                 std::to_string(deg) + "," + std::to_string(b) +
                                 "] has a negative component");
            if (b != 0) t.entries[{i, deg}] += b;
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("not a Betti table object: ") + e.what());
    }
    return t;
}

int thread_count() {
    const char* env = std::getenv("SKELBETTI_THREADS");
    if (env == nullptr) return 1;
    int v = std::atoi(env);
    return std::clamp(v, 1, 64);
}

namespace {

void hochster_range(const SimplicialComplex& complex, int p,
                    const std::vector<Mask>& order, std::size_t begin, std::size_t end,
                    std::map<std::pair<int, Mask>, std::int64_t>& out) {
    // Restrictions with the same facet family have the same homology.
    std::map<std::vector<Mask>, HomologyProfile> memo;
    for (std::size_t idx = begin; idx < end; ++idx) {
        Mask sigma = order[idx];
        SimplicialComplex restricted = complex.restriction(sigma);
        auto [it, inserted] = memo.try_emplace(restricted.facets());
        if (inserted) it->second = reduced_homology(restricted, p);
        const HomologyProfile& profile = it->second;
        int k = popcount(sigma);
        for (int i = 0; i <= k; ++i) {
            std::int64_t v = profile.reduced_dim(k - i - 1);
            if (v != 0) out[{i, sigma}] = v;
        }
    }
}

}  // namespace

GradedBetti hochster(const SimplicialComplex& complex, int p) {
    require_prime(p);
    int n = complex.ground_set_size();
    if (n > 20)
        throw TooLarge("ground set of size " + std::to_string(n) +
                       " exceeds the enumeration cap of 20");

    std::vector<Mask> order;
    order.reserve(std::size_t{1} << n);
    for (Mask s = 0; s < (Mask{1} << n); ++s) order.push_back(s);
    std::stable_sort(order.begin(), order.end(),
                     [](Mask a, Mask b) { return popcount(a) < popcount(b); });

    int workers = std::min<int>(thread_count(), static_cast<int>(order.size()));
    std::vector<std::map<std::pair<int, Mask>, std::int64_t>> partial(workers);
    if (workers <= 1) {
        hochster_range(complex, p, order, 0, order.size(), partial[0]);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (order.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::size_t begin = chunk * w;
            std::size_t end = std::min(order.size(), begin + chunk);
            pool.emplace_back(hochster_range, std::cref(complex), p, std::cref(order),
                              begin, end, std::ref(partial[w]));
        }
        for (auto& t : pool) t.join();
    }

    GradedBetti fine;
    fine.p = p;
    fine.n = n;
    for (auto& part : partial)
        fine.entries.insert(part.begin(), part.end());
    return fine;
}

BettiTable betti_table(const GradedBetti& fine, Convention convention) {
    BettiTable t;
    t.p = fine.p;
    t.convention = Convention::ring;
    t.n = fine.n;
    for (const auto& [key, value] : fine.entries)
        t.add(key.first, popcount(key.second), value);
    return t.to_convention(convention);
}

BettiTable hochster_table(const SimplicialComplex& complex, int p) {
    return betti_table(hochster(complex, p), Convention::ring);
}

DepthReport depth_and_cm(const BettiTable& ring_table, int n, int dim) {
    DepthReport r;
    r.depth = n - ring_table.projective_dimension();
    r.krull = dim + 1;
    r.cohen_macaulay = (r.depth == r.krull);
    return r;
}

DepthReport depth_and_cm(const SimplicialComplex& complex, int p) {
    return depth_and_cm(hochster_table(complex, p), complex.ground_set_size(),
                        complex.dimension());
}

namespace {

// coefficients of (1-t)^k
std::vector<std::int64_t> one_minus_t_power(int k) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1);
    for (int m = 0; m <= k; ++m) c[m] = (m % 2 == 0 ? 1 : -1) * binom(k, m);
    return c;
}

}  // namespace

HilbertReport hilbert_identity_check(const SimplicialComplex& complex,
                                     const BettiTable& ring_table) {
    int n = complex.ground_set_size();
    int d = complex.dimension();
    int degree = std::max(n, ring_table.max_degree());

    HilbertReport rep;
    rep.lhs.assign(degree + 1, 0);
    rep.rhs.assign(degree + 1, 0);

    FVector fv = complex.f_vector();
    for (int i = 0; i <= d + 1; ++i) {
        std::int64_t f = fv.f(i - 1);
        if (f == 0) continue;
        auto pw = one_minus_t_power(n - i);
        for (int m = 0; m < static_cast<int>(pw.size()); ++m)
            rep.lhs[i + m] += f * pw[m];
    }
    for (const auto& [key, value] : ring_table.entries) {
        std::int64_t sign = key.first % 2 == 0 ? 1 : -1;
        rep.rhs[key.second] += sign * value;
    }

    rep.holds = (rep.lhs == rep.rhs);
    if (!rep.holds) {
        for (int m = 0; m <= degree; ++m)
            if (rep.lhs[m] != rep.rhs[m]) {
                rep.mismatch = "coefficient of t^" + std::to_string(m) + ": f-side " +
                               std::to_string(rep.lhs[m]) + " vs table side " +
                               std::to_string(rep.rhs[m]);
                break;
            }
    }
    return rep;
}

HilbertReport hilbert_identity_check(const SimplicialComplex& complex, int p) {
    return hilbert_identity_check(complex, hochster_table(complex, p));
}

std::string VanishingReport::summary() const {
    if (holds && at_bound.empty()) return "all entries below the degree bound";
    std::ostringstream os;
    for (const auto& [i, j, v] : at_bound)
        os << "entry (" << i << "," << j << ")=" << v << " sits at the extreme degree j=d+i+1\n";
    for (const auto& [i, j, v] : violations)
        os << "entry (" << i << "," << j << ")=" << v << " violates the bound j<=d+i+1\n";
    return os.str();
}

VanishingReport vanishing_check(const BettiTable& ring_table, int d) {
    VanishingReport rep;
    for (const auto& [key, value] : ring_table.entries) {
        auto [i, j] = key;
        if (j >= d + i + 2)
            rep.violations.emplace_back(i, j, value);
        else if (j == d + i + 1)
            rep.at_bound.emplace_back(i, j, value);
    }
    rep.holds = rep.violations.empty();
    return rep;
}

}  // namespace skelbetti
