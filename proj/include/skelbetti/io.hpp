#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "skelbetti/matroid.hpp"
#include "skelbetti/simplicial_complex.hpp"

namespace skelbetti {

// Facet / basis files: one set per line as whitespace-separated 1-based
// labels; '#' starts a comment; blank lines skipped; an optional header
// line "n = <int>" (before any set) fixes the ground-set size, which
// otherwise defaults to the largest label seen.  Errors carry
// "<name>:<line>:" prefixes.
struct SetFile {
    int n = 0;
    std::vector<std::vector<int>> sets;
};

SetFile parse_set_file(std::istream& in, const std::string& name);
SetFile read_set_file(const std::string& path);

SimplicialComplex complex_from_file(const std::string& path);
Matroid matroid_from_file(const std::string& path, bool strict = false);

std::string read_text_file(const std::string& path);  // ParseError on I/O failure

// Set list in the same format the parser accepts.
std::string render_set_file(int n, const std::vector<Mask>& sets);

}  // namespace skelbetti
