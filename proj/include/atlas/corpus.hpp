#pragma once

#include "atlas/support.hpp"

#include <string>
#include <vector>

namespace atlas {

struct CorpusEntry {
    std::string name;
    SupportTuple tuple;
};

/// Small named instances: the worked examples plus a few classical systems.
const std::vector<CorpusEntry>& builtin_corpus();

/// Throws ParseError for an unknown name.
const SupportTuple& corpus_tuple(const std::string& name);

} // namespace atlas
