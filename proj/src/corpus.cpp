#include "adjl/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "adjl/errors.hpp"

namespace adjl {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> splitOn(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

std::vector<std::string> splitNonEmpty(const std::string& s, char sep) {
    std::vector<std::string> out;
    for (std::string& piece : splitOn(s, sep))
        if (!piece.empty()) out.push_back(std::move(piece));
    return out;
}

}  // namespace

bool CorpusEntry::hasTag(const std::string& t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::vector<CorpusEntry> parseCorpus(const std::string& text) {
    std::vector<CorpusEntry> entries;
    std::set<std::string> names;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::vector<std::string> fields = splitOn(line, '|');
        if (fields.size() < 4 || fields.size() > 5)
            throw ParseError("corpus line needs 4 or 5 '|'-separated fields, got " +
                                 std::to_string(fields.size()),
                             lineNo, 1);
        CorpusEntry e;
        e.lineNo = lineNo;
        e.name = fields[0];
        e.vars = splitNonEmpty(fields[1], ',');
        e.genStrings = splitNonEmpty(fields[2], ';');
        e.tags = splitNonEmpty(fields[3], ',');
        if (fields.size() == 5) {
            std::vector<std::string> exp = splitNonEmpty(fields[4], ';');
            if (!exp.empty()) e.expectedAdjoint = std::move(exp);
        }
        if (e.name.empty()) throw ParseError("corpus entry without a name", lineNo, 1);
        if (!names.insert(e.name).second)
            throw ParseError("duplicate corpus entry name: " + e.name, lineNo, 1);
        if (e.vars.empty()) throw ParseError("corpus entry without variables", lineNo, 1);
        if (e.genStrings.empty()) throw ParseError("corpus entry without generators", lineNo, 1);
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<CorpusEntry> loadCorpusFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file: " + path, 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseCorpus(buf.str());
}

}  // namespace adjl
