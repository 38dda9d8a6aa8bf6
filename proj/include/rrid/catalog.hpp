#pragma once

// The profile catalog: named offset profiles with their product sides, read
// from a JSON document. The shipped catalog is data/catalog.json, embedded at
// build time; a different file can be loaded at run time.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rrid/profile.hpp"
#include "rrid/residue.hpp"

namespace rrid {

class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    ProfileFamily profile;
    /// Identities sharing the same name share a product side and (S, u).
    std::string identity;
    std::optional<ResidueClass> product;
    std::string citation;
    std::string description;

    const std::string &name() const { return profile.name; }
};

class Catalog {
public:
    /// Throws CatalogError on malformed documents, bad expressions, or
    /// duplicate names.
    static Catalog parse(std::string_view json_text);
    static Catalog load_file(const std::string &path);
    /// The catalog compiled into the library.
    static const Catalog &builtin();

    /// Canonical JSON (two-space indent, trailing newline). The shipped file
    /// is stored in this form, so parse(text).to_json() == text.
    std::string to_json() const;

    const std::vector<CatalogEntry> &entries() const noexcept { return entries_; }
    /// Throws LookupError on an unknown name.
    const CatalogEntry &lookup(std::string_view name) const;
    bool contains(std::string_view name) const;

private:
    std::vector<CatalogEntry> entries_;
};

/// Raw text of data/catalog.json as embedded at build time.
std::string_view builtin_catalog_text();

} // namespace rrid
