#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nonroot {

struct AnchorResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::string corpus_dir = "corpus";
  std::uint64_t seed = 20240611;
  std::size_t fuzz_maps = 2000;  // random maps in the soundness spot check
};

/// Corpus files the suite reads, relative to the corpus directory.
const std::vector<std::string>& suite_corpus_files();

/// Replays every worked example. Each anchor is isolated: a corrupt file or an
/// exception fails that anchor only. Throws InputError up front if any corpus
/// file is missing.
std::vector<AnchorResult> verify_paper(const SuiteOptions& options);

}  // namespace nonroot
