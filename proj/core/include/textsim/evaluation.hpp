/**
 * textsim — semantic text similarity toolkit
 *
 * Copyright (c) 2026 The textsim Authors
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "textsim/corpus.hpp"
#include "textsim/similarity.hpp"

namespace textsim {

struct ClassStats {
  std::size_t n_docs = 0;
  std::size_t n_correct = 0;
};

struct NeighborPair {
  std::size_t doc_id = 0;
  std::size_t neighbor_id = 0;
  double score = 0.0;
  bool correct = false;
};

struct EvalReport {
  Method method = Method::tfidf_cosine;
  std::size_t n_docs = 0;
  std::size_t n_correct = 0;
  double accuracy = 0.0;  // percent, 100 * n_correct / n_docs
  std::map<std::string, ClassStats> per_class;
  std::size_t zero_vector_docs = 0;
  std::map<std::string, std::string> config_echo;
  std::vector<NeighborPair> pairs;  // filled only when requested
};

/// Nearest-neighbor label agreement: document i counts as correct when
/// labels[most_similar(matrix, i).index] == labels[i]. Requires a
/// self-excluded matrix, labels.size() == n and n >= 2.
EvalReport top1_accuracy(const SimilarityMatrix& matrix, const std::vector<std::string>& labels,
                         bool record_pairs = false);

struct CompareOptions {
  TfIdfOptions tfidf;
  TermSimilarityParams term_sim;
  bool skip_oov = false;                // w2v averaging divisor rule
  bool softcos_tfidf_weights = false;   // soft cosine over tf-idf instead of raw counts
  bool record_pairs = false;
};

/// Runs all three method pipelines on the same preprocessed corpus and
/// returns one report per method, in Method enum order.
std::vector<EvalReport> compare_methods(const Corpus& corpus, const EmbeddingTable& table,
                                        const CompareOptions& options = {});

/// Deterministic, machine-readable report (2-space indented JSON).
std::string to_json_string(const EvalReport& report);

/// Aligned-column human-readable report with the per-class breakdown.
std::string to_text_report(const EvalReport& report);

/// Side-by-side accuracy table for several reports plus an informational
/// line stating the observed accuracy ordering of the methods.
std::string summary_table(const std::vector<EvalReport>& reports);

}  // namespace textsim
