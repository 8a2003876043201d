#include "fingeo/incfile.hpp"

#include <fstream>
#include <sstream>

namespace fingeo {

namespace {

long long parse_int(const std::string& tok, int line_no) {
    if (tok.empty()) throw ParseError(line_no, "empty number");
    for (char c : tok)
        if (c < '0' || c > '9') throw ParseError(line_no, "bad integer '" + tok + "'");
    try {
        return std::stoll(tok);
    } catch (const std::exception&) {
        throw ParseError(line_no, "integer out of range '" + tok + "'");
    }
}

}  // namespace

IncFile parse_inc(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++line_no;
        return true;
    };

    if (!next_line() || line != "incidence v1")
        throw ParseError(1, "expected header 'incidence v1'");
    if (!next_line() || line.rfind("points ", 0) != 0)
        throw ParseError(2, "expected 'points <v>'");
    long long v = parse_int(line.substr(7), 2);
    if (v < 1) throw ParseError(2, "need at least one point");
    if (!next_line() || line.rfind("blocks ", 0) != 0)
        throw ParseError(3, "expected 'blocks <b>'");
    long long b = parse_int(line.substr(7), 3);

    std::map<std::string, std::string> metadata;
    std::vector<Block> blocks;
    bool in_metadata = true;
    while (next_line()) {
        if (in_metadata && line.rfind("# ", 0) == 0) {
            std::string kv = line.substr(2);
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw ParseError(line_no, "metadata must be '# key=value'");
            metadata[kv.substr(0, eq)] = kv.substr(eq + 1);
            continue;
        }
        in_metadata = false;
        if (line.empty()) throw ParseError(line_no, "blank line in block list");
        Block blk;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            long long x = parse_int(tok, line_no);
            if (x >= v)
                throw IndexError(line_no, "point index " + tok + " out of range (points=" +
                                              std::to_string(v) + ")");
            if (!blk.empty() && x <= blk.back())
                throw ParseError(line_no, "point indices must be strictly increasing");
            blk.push_back(static_cast<int>(x));
        }
        if (blk.empty()) throw ParseError(line_no, "empty block");
        if (!blocks.empty() && blk == blocks.back())
            throw DuplicateBlock(line_no, "duplicate block");
        if (!blocks.empty() && blk < blocks.back())
            throw ParseError(line_no, "blocks must be sorted lexicographically");
        blocks.push_back(std::move(blk));
    }
    if (static_cast<long long>(blocks.size()) != b)
        throw ParseError(line_no, "expected " + std::to_string(b) + " blocks, got " +
                                      std::to_string(blocks.size()));
    return IncFile{IncidenceStructure(static_cast<int>(v), std::move(blocks)),
                   std::move(metadata)};
}

IncFile read_inc_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_inc(ss.str());
}

std::string write_inc(const IncidenceStructure& S,
                      const std::map<std::string, std::string>& metadata) {
    std::ostringstream os;
    os << "incidence v1\n";
    os << "points " << S.num_points() << "\n";
    os << "blocks " << S.num_blocks() << "\n";
    for (const auto& [k, val] : metadata) os << "# " << k << "=" << val << "\n";
    for (const auto& blk : S.blocks()) {
        for (size_t i = 0; i < blk.size(); ++i) {
            if (i) os << ' ';
            os << blk[i];
        }
        os << '\n';
    }
    return os.str();
}

void write_inc_file(const std::string& path, const IncidenceStructure& S,
                    const std::map<std::string, std::string>& metadata) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << write_inc(S, metadata);
}

}  // namespace fingeo
