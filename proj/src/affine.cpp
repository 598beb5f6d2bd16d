#include "heffter/affine.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace heffter {

Affine parse_affine(std::string_view text) {
    Affine out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto bad = [&](const char* why) {
        throw std::invalid_argument("affine parse error (" + std::string(why) + "): '" + std::string(text) + "'");
    };

    skip_ws();
    if (i == text.size()) bad("empty");
    bool first = true;
    while (i < text.size()) {
        Entry sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            bad("missing operator");
        }
        first = false;

        bool have_digits = false;
        Entry value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            have_digits = true;
            value = value * 10 + (text[i] - '0');
            ++i;
        }
        if (!have_digits) value = 1;

        char var = 0;
        if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
            var = text[i];
            ++i;
        }
        if (!have_digits && var == 0) bad("bare sign");

        Entry term = sign * value;
        switch (var) {
            case 0: out.c0 += term; break;
            case 'k': out.ck += term; break;
            case 'r': out.cr += term; break;
            case 's': out.cs += term; break;
            case 'x': out.cx += term; break;
            case 'y': out.cy += term; break;
            default: bad("unknown symbol");
        }
        skip_ws();
    }
    return out;
}

Grid AffineGrid::eval(const Bindings& b) const {
    Grid out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.at(r, c) = at(r, c).eval(b);
    return out;
}

std::vector<Affine> parse_affine_row(std::string_view line) {
    std::vector<Affine> out;
    std::size_t start = 0;
    while (true) {
        std::size_t amp = line.find('&', start);
        std::string_view cell = line.substr(start, amp == std::string_view::npos ? amp : amp - start);
        out.push_back(parse_affine(cell));
        if (amp == std::string_view::npos) break;
        start = amp + 1;
    }
    return out;
}

AffineGrid parse_affine_grid(std::string_view table) {
    AffineGrid g;
    std::size_t start = 0;
    while (start <= table.size()) {
        std::size_t nl = table.find('\n', start);
        std::string_view line = table.substr(start, nl == std::string_view::npos ? nl : nl - start);
        // skip blank lines around the literal
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (!blank) {
            std::vector<Affine> row = parse_affine_row(line);
            if (g.rows == 0) g.cols = static_cast<int>(row.size());
            else if (static_cast<int>(row.size()) != g.cols)
                throw std::invalid_argument("affine grid: ragged row");
            g.cells.insert(g.cells.end(), row.begin(), row.end());
            ++g.rows;
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return g;
}

AffineGrid transpose(const AffineGrid& g) {
    AffineGrid out;
    out.rows = g.cols;
    out.cols = g.rows;
    out.cells.resize(g.cells.size());
    for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < g.cols; ++c) out.cells[static_cast<std::size_t>(c) * out.cols + r] = g.at(r, c);
    return out;
}

}  // namespace heffter
