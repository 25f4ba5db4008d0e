#pragma once

#include <optional>
#include <string>
#include <vector>

namespace adjl {

// One line of a corpus file:
//   name | vars | gen1; gen2; ... | tag1,tag2[ | expected1; expected2 ]
// '#' starts a comment; blank lines are skipped. Polynomial strings are kept
// verbatim and parsed by the expression module when the entry is evaluated.
struct CorpusEntry {
    std::string name;
    std::vector<std::string> vars;
    std::vector<std::string> genStrings;
    std::vector<std::string> tags;
    std::optional<std::vector<std::string>> expectedAdjoint;
    int lineNo = 0;

    bool hasTag(const std::string& t) const;
};

std::vector<CorpusEntry> parseCorpus(const std::string& text);
std::vector<CorpusEntry> loadCorpusFile(const std::string& path);

}  // namespace adjl
