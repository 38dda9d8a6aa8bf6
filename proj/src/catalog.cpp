#include "rrid/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rrid {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view format_tag = "rrid-catalog/1";

Expr parse_expr(const Json &node, const std::string &context)
{
    try {
        return Expr::parse(node.get<std::string>());
    } catch (const std::exception &e) {
        throw CatalogError(context + ": " + e.what());
    }
}

ProfileBranch parse_branch(const Json &node, const std::string &context)
{
    ProfileBranch b{.slots = Expr::constant(0), .total = Expr::constant(0), .offsets = {}};
    try {
        b.parity = parse_parity(node.at("parity").get<std::string>());
        b.first_index = node.at("first_n").get<std::int64_t>();
    } catch (const std::exception &e) {
        throw CatalogError(context + ": " + e.what());
    }
    b.slots = parse_expr(node.at("u"), context + " u");
    b.total = parse_expr(node.at("S"), context + " S");
    for (const auto &piece : node.at("pi")) {
        OffsetPiece p{std::nullopt, parse_expr(piece.at("value"), context + " pi")};
        if (piece.contains("if")) {
            try {
                p.when = Condition::parse(piece.at("if").get<std::string>());
            } catch (const std::exception &e) {
                throw CatalogError(context + " pi condition: " + e.what());
            }
        }
        b.offsets.push_back(std::move(p));
    }
    if (b.offsets.empty()) {
        throw CatalogError(context + ": empty offset rule list");
    }
    return b;
}

CatalogEntry parse_entry(const Json &node)
{
    CatalogEntry entry;
    try {
        entry.profile.name = node.at("name").get<std::string>();
        entry.identity = node.at("identity").get<std::string>();
        entry.citation = node.at("citation").get<std::string>();
        entry.description = node.at("description").get<std::string>();
        const auto &product = node.at("product");
        if (!product.is_null()) {
            entry.product = ResidueClass(product.at("modulus").get<std::int64_t>(),
                                         product.at("residues").get<std::vector<std::int64_t>>());
        }
    } catch (const CatalogError &) {
        throw;
    } catch (const std::exception &e) {
        throw CatalogError("catalog entry " + node.value("name", std::string("?")) + ": " + e.what());
    }
    const auto &branches = node.at("branches");
    for (std::size_t i = 0; i < branches.size(); ++i) {
        entry.profile.branches.push_back(parse_branch(branches[i], entry.name() + " branch " + std::to_string(i)));
    }
    if (entry.profile.branches.empty()) {
        throw CatalogError(entry.name() + ": no branches");
    }
    return entry;
}

Json branch_to_json(const ProfileBranch &b)
{
    Json node;
    node["parity"] = to_string(b.parity);
    node["first_n"] = b.first_index;
    node["u"] = b.slots.to_string();
    node["S"] = b.total.to_string();
    Json pieces = Json::array();
    for (const auto &p : b.offsets) {
        Json piece;
        if (p.when) {
            piece["if"] = p.when->to_string();
        }
        piece["value"] = p.value.to_string();
        pieces.push_back(std::move(piece));
    }
    node["pi"] = std::move(pieces);
    return node;
}

} // namespace

Catalog Catalog::parse(std::string_view json_text)
{
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const std::exception &e) {
        throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != format_tag) {
        throw CatalogError("catalog format tag must be '" + std::string(format_tag) + "'");
    }
    Catalog catalog;
    try {
        for (const auto &node : doc.at("entries")) {
            catalog.entries_.push_back(parse_entry(node));
        }
    } catch (const CatalogError &) {
        throw;
    } catch (const std::exception &e) {
        throw CatalogError(std::string("malformed catalog: ") + e.what());
    }
    std::vector<std::string> names;
    for (const auto &e : catalog.entries_) {
        names.push_back(e.name());
    }
    std::sort(names.begin(), names.end());
    if (auto dup = std::adjacent_find(names.begin(), names.end()); dup != names.end()) {
        throw CatalogError("duplicate catalog name '" + *dup + "'");
    }
    return catalog;
}

Catalog Catalog::load_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CatalogError("cannot open catalog file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

const Catalog &Catalog::builtin()
{
    static const Catalog catalog = parse(builtin_catalog_text());
    return catalog;
}

std::string Catalog::to_json() const
{
    Json doc;
    doc["format"] = format_tag;
    Json entries = Json::array();
    for (const auto &e : entries_) {
        Json node;
        node["name"] = e.name();
        node["identity"] = e.identity;
        node["citation"] = e.citation;
        node["description"] = e.description;
        if (e.product) {
            node["product"] = Json{{"modulus", e.product->modulus()}, {"residues", e.product->residues()}};
        } else {
            node["product"] = nullptr;
        }
        Json branches = Json::array();
        for (const auto &b : e.profile.branches) {
            branches.push_back(branch_to_json(b));
        }
        node["branches"] = std::move(branches);
        entries.push_back(std::move(node));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

const CatalogEntry &Catalog::lookup(std::string_view name) const
{
    for (const auto &e : entries_) {
        if (e.name() == name) {
            return e;
        }
    }
    throw LookupError("unknown catalog entry '" + std::string(name) + "'");
}

bool Catalog::contains(std::string_view name) const
{
    return std::any_of(entries_.begin(), entries_.end(), [&](const CatalogEntry &e) { return e.name() == name; });
}

} // namespace rrid
