#pragma once

#include "realform/satake.hpp"

#include <filesystem>
#include <string_view>

namespace realform {

struct CatalogEntry {
    SatakeDatum datum;   // 0-based indices
    std::string family;  // directory the entry came from
};

/// Validated collection of named real-form data.  Every entry is run through
/// the full Satake checks at load time; a bad data file aborts the load.
class Catalog {
public:
    static Catalog load(const std::filesystem::path& dir);

    /// Catalog from the default directory (CARTANPI0_CATALOG overrides the
    /// build-time path), loaded once per process.
    static const Catalog& standard();
    static std::filesystem::path default_dir();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry* find(std::string_view name) const;

    /// Derive the conjugation for a named entry; unknown names are rejected
    /// with the list of available ones.
    SigmaAction realize(std::string_view name) const;

private:
    std::vector<CatalogEntry> entries_;
};

}  // namespace realform
