#include "heffter/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace heffter {

namespace {

using nlohmann::json;

// Entries parsed from files are re-bounded so later sums stay in 64 bits.
constexpr Entry kMaxFileEntry = Entry{1} << 31;
constexpr Entry kMaxFileCells = Entry{1} << 30;

void check_document(const ArrayDocument& doc) {
    if (doc.m < 1 || doc.n < 1 || doc.m * doc.n > kMaxFileCells)
        throw std::invalid_argument("array document: bad dimensions");
    if (static_cast<Entry>(doc.entries.size()) != doc.m * doc.n)
        throw std::invalid_argument("array document: entry count does not match dimensions");
    for (Entry e : doc.entries)
        if (e > kMaxFileEntry || e < -kMaxFileEntry)
            throw std::invalid_argument("array document: entry out of supported range");
}

json placements_to_json(const std::vector<TilePlacement>& ps) {
    json arr = json::array();
    for (const TilePlacement& p : ps) {
        json o{{"tile", p.tile}, {"row", p.row},     {"col", p.col},
               {"rows", p.rows}, {"cols", p.cols},   {"shift", p.shift}};
        if (p.support_lo != 0 || p.support_hi != 0) o["support"] = {p.support_lo, p.support_hi};
        arr.push_back(std::move(o));
    }
    return arr;
}

std::vector<TilePlacement> placements_from_json(const json& arr) {
    std::vector<TilePlacement> out;
    for (const json& o : arr) {
        TilePlacement p;
        p.tile = o.at("tile").get<std::string>();
        p.row = o.at("row").get<int>();
        p.col = o.at("col").get<int>();
        p.rows = o.at("rows").get<int>();
        p.cols = o.at("cols").get<int>();
        p.shift = o.at("shift").get<Entry>();
        if (o.contains("support")) {
            p.support_lo = o["support"][0].get<Entry>();
            p.support_hi = o["support"][1].get<Entry>();
        }
        out.push_back(std::move(p));
    }
    return out;
}

json metadata_json(const ArrayDocument& doc) {
    json j;
    j["format_version"] = doc.format_version;
    j["m"] = doc.m;
    j["n"] = doc.n;
    j["modulus"] = doc.modulus;
    if (doc.cls) j["class"] = {{"modular", doc.cls->modular}, {"integer", doc.cls->integer}, {"shiftable", doc.cls->shiftable}};
    if (doc.provenance) {
        const Provenance& prov = *doc.provenance;
        j["provenance"] = {{"method", prov.method},
                           {"variant", prov.variant},
                           {"params", prov.params},
                           {"placements", placements_to_json(prov.placements)}};
    }
    return j;
}

void metadata_from_json(const json& j, ArrayDocument& doc) {
    doc.format_version = j.value("format_version", 1);
    if (j.contains("class")) {
        const json& c = j["class"];
        doc.cls = ClaimedClass{c.at("modular").get<bool>(), c.at("integer").get<bool>(), c.at("shiftable").get<bool>()};
    }
    if (j.contains("provenance")) {
        const json& p = j["provenance"];
        Provenance prov;
        prov.method = p.at("method").get<std::string>();
        prov.variant = p.at("variant").get<std::string>();
        prov.params = p.at("params").get<std::map<std::string, Entry>>();
        prov.placements = placements_from_json(p.at("placements"));
        doc.provenance = std::move(prov);
    }
}

std::string serialize_text(const ArrayDocument& doc) {
    std::ostringstream out;
    out << "heffter " << doc.m << ' ' << doc.n << ' ' << doc.modulus << '\n';
    for (Entry r = 0; r < doc.m; ++r) {
        for (Entry c = 0; c < doc.n; ++c) {
            if (c) out << ' ';
            out << doc.entries[static_cast<std::size_t>(r * doc.n + c)];
        }
        out << '\n';
    }
    return out.str();
}

ArrayDocument parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string magic;
    ArrayDocument doc;
    if (!(in >> magic >> doc.m >> doc.n >> doc.modulus) || magic != "heffter")
        throw std::invalid_argument("text parse: bad header, expected 'heffter m n modulus'");
    if (doc.m < 1 || doc.n < 1 || doc.m * doc.n > kMaxFileCells)
        throw std::invalid_argument("text parse: bad dimensions");
    doc.entries.resize(static_cast<std::size_t>(doc.m * doc.n));
    for (Entry& e : doc.entries)
        if (!(in >> e)) throw std::invalid_argument("text parse: missing entries");
    check_document(doc);
    return doc;
}

std::string serialize_json(const ArrayDocument& doc) {
    json j = metadata_json(doc);
    j["entries"] = doc.entries;
    return j.dump(2) + "\n";
}

ArrayDocument parse_json(std::string_view text) {
    const json j = json::parse(text);
    ArrayDocument doc;
    doc.m = j.at("m").get<Entry>();
    doc.n = j.at("n").get<Entry>();
    doc.modulus = j.at("modulus").get<Entry>();
    doc.entries = j.at("entries").get<std::vector<Entry>>();
    metadata_from_json(j, doc);
    check_document(doc);
    return doc;
}

std::string serialize_csv(const ArrayDocument& doc) {
    std::ostringstream out;
    for (Entry r = 0; r < doc.m; ++r) {
        for (Entry c = 0; c < doc.n; ++c) {
            if (c) out << ',';
            out << doc.entries[static_cast<std::size_t>(r * doc.n + c)];
        }
        out << '\n';
    }
    return out.str();
}

ArrayDocument parse_csv(std::string_view text) {
    ArrayDocument doc;
    std::istringstream in{std::string(text)};
    std::string line;
    Entry cols = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        Entry count = 0;
        while (std::getline(row, cell, ',')) {
            try {
                doc.entries.push_back(std::stoll(cell));
            } catch (const std::exception&) {
                throw std::invalid_argument("csv parse: bad cell '" + cell + "'");
            }
            ++count;
        }
        if (cols == -1) cols = count;
        else if (count != cols) throw std::invalid_argument("csv parse: ragged rows");
        ++doc.m;
    }
    if (doc.m == 0) throw std::invalid_argument("csv parse: empty input");
    doc.n = cols;
    doc.modulus = 2 * doc.m * doc.n + 1;
    check_document(doc);
    return doc;
}

}  // namespace

Grid ArrayDocument::grid() const { return Grid(static_cast<int>(m), static_cast<int>(n), entries); }

ArrayDocument document_from(const ConstructionResult& result) {
    const Grid& g = result.array.grid();
    ArrayDocument doc;
    doc.m = g.rows();
    doc.n = g.cols();
    doc.modulus = result.array.modulus();
    doc.entries.assign(g.entries().begin(), g.entries().end());
    doc.cls = result.claimed;
    doc.provenance = result.provenance;
    return doc;
}

ArrayDocument document_from(const Grid& g) {
    ArrayDocument doc;
    doc.m = g.rows();
    doc.n = g.cols();
    doc.modulus = 2 * g.size() + 1;
    doc.entries.assign(g.entries().begin(), g.entries().end());
    return doc;
}

std::string serialize(const ArrayDocument& doc, Format format) {
    check_document(doc);
    switch (format) {
        case Format::text: return serialize_text(doc);
        case Format::json: return serialize_json(doc);
        case Format::csv: return serialize_csv(doc);
    }
    throw std::logic_error("unreachable");
}

ArrayDocument parse(std::string_view text, Format format) {
    switch (format) {
        case Format::text: return parse_text(text);
        case Format::json: return parse_json(text);
        case Format::csv: return parse_csv(text);
    }
    throw std::logic_error("unreachable");
}

std::string csv_sidecar(const ArrayDocument& doc) { return metadata_json(doc).dump(2) + "\n"; }

std::optional<Format> format_from_name(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    return std::nullopt;
}

Format format_for_path(const std::string& path) {
    const auto dot = path.rfind('.');
    const std::string ext = (dot == std::string::npos) ? "" : path.substr(dot + 1);
    if (ext == "json") return Format::json;
    if (ext == "csv") return Format::csv;
    return Format::text;
}

void write_document(const std::string& path, const ArrayDocument& doc, Format format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize(doc, format);
    if (format == Format::csv) {
        std::ofstream meta(path + ".meta.json");
        if (!meta) throw std::runtime_error("cannot write " + path + ".meta.json");
        meta << csv_sidecar(doc);
    }
}

ArrayDocument read_document(const std::string& path, std::optional<Format> format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), format.value_or(format_for_path(path)));
}

}  // namespace heffter
