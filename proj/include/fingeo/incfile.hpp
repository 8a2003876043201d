#ifndef FINGEO_INCFILE_HPP
#define FINGEO_INCFILE_HPP

#include <iosfwd>
#include <map>

#include "fingeo/incidence.hpp"

namespace fingeo {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + reason),
          line(line_no) {}
};

struct IndexError : ParseError {
    using ParseError::ParseError;
};
struct DuplicateBlock : ParseError {
    using ParseError::ParseError;
};

struct IncFile {
    IncidenceStructure structure;
    std::map<std::string, std::string> metadata;  // from "# key=value" lines
};

/// Format, bit-exact:
///   incidence v1
///   points <v>
///   blocks <b>
///   # key=value            (optional, repeated)
///   <b lines of strictly increasing 0-based point indices>
/// Blocks sorted lexicographically, LF endings, ASCII only.
IncFile parse_inc(const std::string& text);
IncFile read_inc_file(const std::string& path);

std::string write_inc(const IncidenceStructure& S,
                      const std::map<std::string, std::string>& metadata = {});
void write_inc_file(const std::string& path, const IncidenceStructure& S,
                    const std::map<std::string, std::string>& metadata = {});

}  // namespace fingeo

#endif
