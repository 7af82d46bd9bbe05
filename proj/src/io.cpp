#include "skelbetti/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace skelbetti {

namespace {

std::string where(const std::string& name, int line) {
    return name + ":" + std::to_string(line) + ": ";
}

}  // namespace

SetFile parse_set_file(std::istream& in, const std::string& name) {
    SetFile out;
    bool have_header = false;
    int max_label = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find('=') != std::string::npos) {
            std::istringstream is(line);
            std::string key, eq;
            int value = 0;
            if (!(is >> key >> eq >> value) || key != "n" || eq != "=")
                throw ParseError(where(name, lineno) + "malformed header (expected 'n = <int>')");
            if (!out.sets.empty())
                throw ParseError(where(name, lineno) + "header must precede the set lines");
            if (value < 1)
                throw ParseError(where(name, lineno) + "ground-set size must be positive");
            out.n = value;
            have_header = true;
            continue;
        }
        std::istringstream is(line);
        std::vector<int> labels;
        std::string token;
        while (is >> token) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size() || v < 1)
                throw ParseError(where(name, lineno) + "expected a positive integer, got '" +
                                 token + "'");
            labels.push_back(v);
            max_label = std::max(max_label, v);
        }
        if (!labels.empty()) out.sets.push_back(std::move(labels));
    }
    if (out.sets.empty()) throw ParseError(name + ": no sets found");
    if (!have_header) out.n = max_label;
    if (max_label > out.n)
        throw ParseError(name + ": label " + std::to_string(max_label) +
                         " exceeds declared ground-set size " + std::to_string(out.n));
    return out;
}

SetFile read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_set_file(in, path);
}

SimplicialComplex complex_from_file(const std::string& path) {
    SetFile f = read_set_file(path);
    return SimplicialComplex(f.n, f.sets);
}

Matroid matroid_from_file(const std::string& path, bool strict) {
    SetFile f = read_set_file(path);
    return Matroid(f.n, f.sets, strict);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string render_set_file(int n, const std::vector<Mask>& sets) {
    std::ostringstream os;
    os << "n = " << n << '\n';
    for (Mask s : sets) {
        bool first = true;
        for (int v : elements(s)) {
            os << (first ? "" : " ") << v;
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace skelbetti
