#include "cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace quatcong::cli {

namespace fs = std::filesystem;

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json cache_record(const LevelData& d) {
    const auto& cs = d.classes;
    json classes = json::array();
    for (const auto& c : cs.classes)
        classes.push_back({{"basis", basis_to_json(c.representative)},
                           {"nrd", to_json(c.nrd_ideal)},
                           {"unit_group_order", c.unit_group_order}});
    json involutions = json::object();
    for (const auto& s : d.involutions) involutions[std::to_string(s.prime)] = s.permutation;
    json brandt = json::object();
    for (const auto& b : d.brandt) brandt[std::to_string(b.prime)] = to_json(b.entries);
    json payload = {{"schema_version", kCacheSchemaVersion},
                    {"level", d.level},
                    {"bound", d.bound},
                    {"algebra", {{"a", cs.algebra.a}, {"b", cs.algebra.b}}},
                    {"order", basis_to_json(cs.order)},
                    {"bfs_prime", cs.bfs_prime},
                    {"classes", classes},
                    {"involutions", involutions},
                    {"brandt", brandt}};
    payload["checksum"] = fnv1a_hex(payload.dump());
    return payload;
}

LevelData level_from_record(const json& record) {
    if (!record.is_object() || !record.contains("schema_version"))
        throw std::runtime_error("cache record: missing schema version");
    if (record["schema_version"].get<int>() != kCacheSchemaVersion)
        throw std::runtime_error("cache record: unsupported schema version");
    json payload = record;
    const std::string checksum = payload.at("checksum").get<std::string>();
    payload.erase("checksum");
    if (fnv1a_hex(payload.dump()) != checksum) throw std::runtime_error("cache record: checksum mismatch");

    const long n = record.at("level").get<long>();
    require_admissible_level(n);
    QuaternionAlgebra alg;
    alg.a = record["algebra"]["a"].get<long>();
    alg.b = record["algebra"]["b"].get<long>();
    alg.discriminant = n;
    alg.ramified_primes = ramified_places(alg.a, alg.b);
    if (alg.ramified_primes != prime_factors(n)) throw std::runtime_error("cache record: algebra has the wrong ramification");

    ClassSet cs;
    cs.algebra = alg;
    cs.order = lattice_from_json(alg, record.at("order"));
    if (!is_order(alg, cs.order) || reduced_discriminant(alg, cs.order) != n)
        throw std::runtime_error("cache record: stored order is not maximal");
    cs.bfs_prime = record.at("bfs_prime").get<long>();
    for (const auto& c : record.at("classes")) {
        RightIdealClass rc = describe_ideal(alg, lattice_from_json(alg, c.at("basis")));
        if (rc.unit_group_order != c.at("unit_group_order").get<long>() || rc.nrd_ideal != rational_from_json(c.at("nrd")))
            throw std::runtime_error("cache record: class data disagrees with its representative");
        cs.classes.push_back(std::move(rc));
    }
    cs.mass = mass(cs);
    if (cs.mass != expected_mass(n)) throw std::runtime_error("cache record: mass mismatch");

    LevelData d;
    d.level = n;
    d.bound = record.at("bound").get<long>();
    for (long p : prime_factors(n)) {
        Involution s;
        s.prime = p;
        s.permutation = record.at("involutions").at(std::to_string(p)).get<std::vector<size_t>>();
        if (s.permutation.size() != cs.size()) throw std::runtime_error("cache record: bad involution");
        for (size_t i = 0; i < s.permutation.size(); ++i) {
            if (s.permutation[i] >= cs.size() || s.permutation[s.permutation[i]] != i)
                throw std::runtime_error("cache record: bad involution");
            if (s.permutation[i] == i) ++s.fixed_count;
        }
        d.involutions.push_back(std::move(s));
    }
    for (long p : hecke_primes(n, d.bound)) {
        BrandtMatrix b;
        b.prime = p;
        b.level = n;
        b.entries = long_matrix_from_json(record.at("brandt").at(std::to_string(p)));
        if (b.size() != cs.size()) throw std::runtime_error("cache record: bad Brandt matrix");
        for (size_t i = 0; i < b.size(); ++i) {
            long row = 0;
            for (size_t j = 0; j < b.size(); ++j) row += b(i, j);
            if (row != p + 1) throw std::runtime_error("cache record: bad Brandt matrix");
        }
        d.brandt.push_back(std::move(b));
    }
    d.classes = std::move(cs);
    return d;
}

std::optional<fs::path> cache_dir_from_env() {
    const char* v = std::getenv("QUATCONG_CACHE_DIR");
    if (!v || !*v) return std::nullopt;
    return fs::path(v);
}

fs::path cache_path(const fs::path& dir, long n) { return dir / ("level-" + std::to_string(n) + ".json"); }

void write_atomic(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary);
        out << text;
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::optional<LevelData> load_cached(const fs::path& dir, long n, long bound) {
    fs::path p = cache_path(dir, n);
    if (!fs::exists(p)) return std::nullopt;
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    LevelData d = level_from_record(json::parse(ss.str()));
    if (d.level != n) throw std::runtime_error("cache record for the wrong level in " + p.string());
    if (bound > d.bound) {
        ClassSet cs = std::move(d.classes);
        return assemble_level(std::move(cs), bound);
    }
    return d;
}

void store_cached(const fs::path& dir, const LevelData& d) {
    write_atomic(cache_path(dir, d.level), cache_record(d).dump() + "\n");
}

LevelData obtain_level(long n, long bound, const std::optional<fs::path>& dir) {
    require_admissible_level(n);
    if (dir) {
        if (auto d = load_cached(*dir, n, bound)) {
            if (d->bound > std::max(bound, sturm_bound(n))) {
                // Keep only what was asked for.
                const long want = std::max(bound, sturm_bound(n));
                std::erase_if(d->brandt, [&](const BrandtMatrix& b) { return b.prime > want; });
                d->bound = want;
            }
            return std::move(*d);
        }
    }
    LevelData d = compute_level(n, bound);
    if (dir) store_cached(*dir, d);
    return d;
}

}  // namespace quatcong::cli
