#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "heffter/construction.hpp"

namespace heffter {

enum class Format { text, json, csv };

/// Flat, serializable view of an array plus whatever metadata is known.
/// Text and CSV carry the grid (and derived modulus) only; JSON carries
/// everything including class flags and provenance.
struct ArrayDocument {
    int format_version = 1;
    Entry m = 0, n = 0, modulus = 0;
    std::vector<Entry> entries;  // row-major, m*n of them
    std::optional<ClaimedClass> cls;
    std::optional<Provenance> provenance;

    Grid grid() const;
};

ArrayDocument document_from(const ConstructionResult& result);
ArrayDocument document_from(const Grid& grid);

std::string serialize(const ArrayDocument& doc, Format format);
ArrayDocument parse(std::string_view text, Format format);

/// Compact JSON for the metadata that a CSV file cannot carry; written as
/// the "<file>.meta.json" sidecar.
std::string csv_sidecar(const ArrayDocument& doc);

std::optional<Format> format_from_name(std::string_view name);  // "text" | "json" | "csv"
Format format_for_path(const std::string& path);                // by extension, text when unknown

void write_document(const std::string& path, const ArrayDocument& doc, Format format);
ArrayDocument read_document(const std::string& path, std::optional<Format> format = std::nullopt);

}  // namespace heffter
