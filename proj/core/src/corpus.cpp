/**
 * textsim — semantic text similarity toolkit
 *
 * Copyright (c) 2026 The textsim Authors
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "textsim/corpus.hpp"

#include <fstream>
#include <random>

#include <json.hpp>

#include "csv_reader.hpp"
#include "textsim/error.hpp"

namespace textsim {

std::vector<std::string> Corpus::labels() const {
  std::vector<std::string> out;
  out.reserve(docs.size());
  for (const Document& d : docs) out.push_back(d.label);
  return out;
}

std::set<std::string> Corpus::label_set() const {
  std::set<std::string> out;
  for (const Document& d : docs) out.insert(d.label);
  return out;
}

std::map<std::string, std::size_t> Corpus::class_counts() const {
  std::map<std::string, std::size_t> out;
  for (const Document& d : docs) ++out[d.label];
  return out;
}

const LabelMap& default_agnews_labels() {
  static const LabelMap labels = {
      {"1", "World"}, {"2", "Sports"}, {"3", "Business"}, {"4", "Sci/Tech"}};
  return labels;
}

Corpus load_agnews_csv(const std::string& path, const LabelMap& labels) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);

  Corpus corpus;
  detail::CsvReader reader(in, path);
  std::vector<std::string> fields;
  std::size_t line = 0;
  while (reader.next(fields, line)) {
    if (fields.size() != 3)
      throw MalformedRow("expected 3 columns, got " + std::to_string(fields.size()), path, line);
    auto it = labels.find(fields[0]);
    if (it == labels.end())
      throw MalformedRow("unknown class index \"" + fields[0] + "\"", path, line);
    Document doc;
    doc.id = corpus.docs.size();
    doc.source_id = doc.id;
    doc.label = it->second;
    doc.raw = fields[1] + " " + fields[2];
    corpus.docs.push_back(std::move(doc));
  }
  return corpus;
}

namespace {

// Unbiased draw from [0, n) using rejection on raw mt19937_64 output. The
// engine's output sequence is fixed by the standard, so sampling is
// reproducible across platforms (std::uniform_int_distribution is not).
std::uint64_t bounded_u64(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

}  // namespace

Corpus sample(const Corpus& corpus, std::size_t n, std::uint64_t seed) {
  if (n == 0 || n > corpus.size())
    throw BadSampleSize("sample size " + std::to_string(n) + " not in [1, " +
                        std::to_string(corpus.size()) + "]");

  std::vector<std::size_t> indices(corpus.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;

  // Partial Fisher-Yates: after i steps the first i slots hold the selection.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = i + static_cast<std::size_t>(bounded_u64(rng, indices.size() - i));
    std::swap(indices[i], indices[j]);
  }

  Corpus out;
  out.docs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Document doc = corpus.docs[indices[i]];
    doc.id = i;
    out.docs.push_back(std::move(doc));
  }
  return out;
}

Corpus preprocess_corpus(Corpus corpus, const PreprocessConfig& config, const StopwordList& stops,
                         const LemmaLexicon& lexicon) {
  for (Document& doc : corpus.docs) doc.tokens = preprocess(doc.raw, config, stops, lexicon);
  return corpus;
}

void save_jsonl(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write corpus cache: " + path);
  for (const Document& doc : corpus.docs) {
    nlohmann::json j{{"id", doc.id},
                     {"source_id", doc.source_id},
                     {"label", doc.label},
                     {"raw", doc.raw},
                     {"tokens", doc.tokens}};
    out << j.dump() << '\n';
  }
  if (!out) throw IoError("error writing corpus cache: " + path);
}

Corpus load_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus cache: " + path);
  Corpus corpus;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON", path, lineno);
    try {
      Document doc;
      doc.id = j.at("id").get<std::size_t>();
      doc.source_id = j.value("source_id", doc.id);
      doc.label = j.at("label").get<std::string>();
      doc.raw = j.at("raw").get<std::string>();
      doc.tokens = j.at("tokens").get<std::vector<Token>>();
      if (doc.id != corpus.docs.size())
        throw ParseError("document ids must be 0..n-1 in order", path, lineno);
      corpus.docs.push_back(std::move(doc));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad document record: ") + e.what(), path, lineno);
    }
  }
  return corpus;
}

}  // namespace textsim
