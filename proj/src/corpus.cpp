#include "orbitadm/corpus.hpp"

#include "corpus_data.inc"

namespace orbitadm {

std::span<const CorpusEntry> corpus() { return {kCorpusEntries, kCorpusSize}; }

std::optional<CorpusEntry> find_corpus(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  return std::nullopt;
}

std::string corpus_description(const CorpusEntry& entry) {
  std::string_view src = entry.source;
  if (src.empty() || src.front() != '#') return {};
  src.remove_prefix(1);
  const auto end = src.find('\n');
  src = src.substr(0, end);
  while (!src.empty() && src.front() == ' ') src.remove_prefix(1);
  return std::string(src);
}

}  // namespace orbitadm
