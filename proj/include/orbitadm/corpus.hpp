#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace orbitadm {

/// A problem file bundled into the library at build time (corpus/*.orb).
struct CorpusEntry {
  std::string_view name;
  std::string_view source;
};

std::span<const CorpusEntry> corpus();
std::optional<CorpusEntry> find_corpus(std::string_view name);

/// Text of the leading '#' comment line, without the marker.
std::string corpus_description(const CorpusEntry& entry);

}  // namespace orbitadm
