#include "realform/catalog.hpp"

#include "support/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace realform {

using nlohmann::json;
using support::validation_error;

namespace {

SatakeDatum parse_entry(const json& doc, const std::string& where) {
    static const std::set<std::string> allowed{"name", "series", "rank", "black", "arrows"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!allowed.count(it.key()))
            throw validation_error(where + ": unknown field '" + it.key() + "'");
    SatakeDatum d;
    try {
        d.name = doc.at("name").get<std::string>();
        std::string series = doc.at("series").get<std::string>();
        if (series.size() != 1) throw validation_error(where + ": series must be one letter");
        d.series = series[0];
        d.rank = doc.at("rank").get<int>();
        for (int i : doc.at("black").get<std::vector<int>>()) d.black.push_back(i - 1);
        for (const auto& pair : doc.at("arrows")) {
            if (!pair.is_array() || pair.size() != 2)
                throw validation_error(where + ": arrows must be index pairs");
            d.arrows.emplace_back(pair[0].get<int>() - 1, pair[1].get<int>() - 1);
        }
    } catch (const json::exception& e) {
        throw validation_error(where + ": " + e.what());
    }
    return d;
}

}  // namespace

Catalog Catalog::load(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw validation_error("catalog directory not found: " + dir.string());

    Catalog cat;
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    for (const fs::path& path : files) {
        std::ifstream in(path);
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw validation_error(path.string() + ": " + e.what());
        }
        CatalogEntry e;
        e.datum = parse_entry(doc, path.string());
        e.family = path.parent_path().filename().string();
        // machine-check every entry before trusting it
        derive_sigma(e.datum);
        cat.entries_.push_back(std::move(e));
    }

    std::sort(cat.entries_.begin(), cat.entries_.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                  auto key = [](const CatalogEntry& e) {
                      return std::tuple<const std::string&, char, int, const std::string&>(
                          e.family, e.datum.series, e.datum.rank, e.datum.name);
                  };
                  return key(a) < key(b);
              });
    for (std::size_t i = 0; i + 1 < cat.entries_.size(); ++i)
        if (cat.entries_[i].datum.name == cat.entries_[i + 1].datum.name)
            throw validation_error("duplicate catalog name: " + cat.entries_[i].datum.name);
    return cat;
}

std::filesystem::path Catalog::default_dir() {
    if (const char* env = std::getenv("CARTANPI0_CATALOG")) return env;
#ifdef CARTANPI0_SOURCE_CATALOG_DIR
    return CARTANPI0_SOURCE_CATALOG_DIR;
#else
    return "data/catalog";
#endif
}

const Catalog& Catalog::standard() {
    static Catalog cat = load(default_dir());
    return cat;
}

const CatalogEntry* Catalog::find(std::string_view name) const {
    for (const CatalogEntry& e : entries_)
        if (e.datum.name == name) return &e;
    return nullptr;
}

SigmaAction Catalog::realize(std::string_view name) const {
    const CatalogEntry* e = find(name);
    if (!e) {
        std::ostringstream os;
        os << "unknown real form '" << name << "'; available:";
        for (const CatalogEntry& c : entries_) os << " " << c.datum.name;
        throw validation_error(os.str());
    }
    return derive_sigma(e->datum);
}

}  // namespace realform
