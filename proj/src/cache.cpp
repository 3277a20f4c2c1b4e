#include "cubix/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include <json.hpp>

namespace cubix {

namespace {

using nlohmann::json;

constexpr const char* kOrthogonalFormat = "cubix-o53-v1";
constexpr const char* kWeylFormat = "cubix-weyl-v1";

// Line permutations as 27-character strings over a 27-letter alphabet.
constexpr const char* kPermAlphabet = "0123456789ABCDEFGHIJKLMNOPQ";

std::optional<json> load_json(const std::filesystem::path& file,
                              const char* format) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    json doc;
    try {
        in >> doc;
    } catch (const json::exception&) {
        return std::nullopt;
    }
    if (!doc.is_object() || doc.value("format", "") != format) return std::nullopt;
    return doc;
}

void store_json(const std::filesystem::path& file, const json& doc) {
    std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file);
    out << doc << "\n";
}

std::string encode_perm(const LinePerm& p) {
    std::string s(27, '?');
    for (std::size_t i = 0; i < 27; ++i) s[i] = kPermAlphabet[p[i]];
    return s;
}

std::optional<LinePerm> decode_perm(const std::string& s) {
    if (s.size() != 27) return std::nullopt;
    LinePerm p{};
    for (std::size_t i = 0; i < 27; ++i) {
        const char* hit = std::strchr(kPermAlphabet, s[i]);
        if (hit == nullptr || *hit == '\0') return std::nullopt;
        p[i] = static_cast<std::uint8_t>(hit - kPermAlphabet);
    }
    return p;
}

} // namespace

CacheConfig resolve_cache(const std::string& flag_dir) {
    CacheConfig config;
    if (const char* env = std::getenv("CUBIX_CACHE"); env != nullptr && *env != '\0')
        config.dir = std::filesystem::path(env);
    else if (!flag_dir.empty())
        config.dir = std::filesystem::path(flag_dir);
    return config;
}

GroupEnumeration cached_orthogonal_group(const CacheConfig& cache) {
    if (!cache.dir) return orthogonal_group();
    const auto file = *cache.dir / "orthogonal_group.json";

    if (const auto doc = load_json(file, kOrthogonalFormat)) {
        const auto& elems = (*doc)["elements"];
        if (elems.is_array() && !elems.empty()) {
            GroupEnumeration group;
            group.elements.reserve(elems.size());
            bool good = true;
            for (const auto& e : elems) {
                if (!e.is_number_unsigned()) {
                    good = false;
                    break;
                }
                group.elements.push_back(e.get<std::uint64_t>());
            }
            if (good && std::is_sorted(group.elements.begin(), group.elements.end()))
                return group;
        }
    }

    GroupEnumeration group = orthogonal_group();
    json doc;
    doc["format"] = kOrthogonalFormat;
    doc["order"] = group.order();
    doc["elements"] = group.elements;
    store_json(file, doc);
    return group;
}

WeylGroup cached_weyl_group(const CacheConfig& cache) {
    if (!cache.dir) return weyl_group();
    const auto file = *cache.dir / "weyl_group.json";

    if (const auto doc = load_json(file, kWeylFormat)) {
        const auto& perms = (*doc)["perms"];
        if (perms.is_array() && !perms.empty()) {
            WeylGroup group;
            group.elements.reserve(perms.size());
            bool good = true;
            for (const auto& s : perms) {
                const auto p =
                    s.is_string() ? decode_perm(s.get<std::string>()) : std::nullopt;
                if (!p) {
                    good = false;
                    break;
                }
                group.elements.push_back(*p);
            }
            if (good && std::is_sorted(group.elements.begin(), group.elements.end()))
                return group;
        }
    }

    WeylGroup group = weyl_group();
    json doc;
    doc["format"] = kWeylFormat;
    doc["order"] = group.order();
    std::vector<std::string> perms;
    perms.reserve(group.elements.size());
    for (const auto& p : group.elements) perms.push_back(encode_perm(p));
    doc["perms"] = perms;
    store_json(file, doc);
    return group;
}

} // namespace cubix
