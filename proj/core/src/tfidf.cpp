/**
 * textsim — semantic text similarity toolkit
 *
 * Copyright (c) 2026 The textsim Authors
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "textsim/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include <json.hpp>

#include "textsim/error.hpp"

namespace textsim {

Vocabulary Vocabulary::build(const std::vector<std::vector<Token>>& docs) {
  // std::map keeps terms in bytewise order, giving reproducible dense ids.
  std::map<std::string, std::uint32_t, std::less<>> df;
  for (const auto& tokens : docs) {
    const std::set<std::string_view> uniq(tokens.begin(), tokens.end());
    for (std::string_view t : uniq) {
      auto it = df.find(t);
      if (it == df.end())
        df.emplace(std::string(t), 1);
      else
        ++it->second;
    }
  }

  Vocabulary vocab;
  vocab.n_docs_ = docs.size();
  vocab.terms_.reserve(df.size());
  vocab.df_.reserve(df.size());
  for (auto& [term, count] : df) {
    vocab.ids_.emplace(term, static_cast<std::uint32_t>(vocab.terms_.size()));
    vocab.terms_.push_back(term);
    vocab.df_.push_back(count);
  }
  return vocab;
}

Vocabulary Vocabulary::from_parts(std::vector<std::string> terms, std::vector<std::uint32_t> df,
                                  std::size_t n_docs) {
  if (terms.size() != df.size())
    throw LengthMismatch("vocabulary terms and df arrays differ in length");
  Vocabulary vocab;
  vocab.n_docs_ = n_docs;
  vocab.terms_ = std::move(terms);
  vocab.df_ = std::move(df);
  for (std::uint32_t id = 0; id < vocab.terms_.size(); ++id) {
    const std::uint32_t d = vocab.df_[id];
    if (d < 1 || d > n_docs)
      throw ContractViolation("df out of range for term \"" + vocab.terms_[id] + "\"");
    vocab.ids_.emplace(vocab.terms_[id], id);
  }
  if (vocab.ids_.size() != vocab.terms_.size())
    throw ContractViolation("duplicate terms in vocabulary");
  return vocab;
}

std::optional<std::uint32_t> Vocabulary::id_of(const std::string& term) const {
  auto it = ids_.find(term);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& Vocabulary::term_of(std::uint32_t id) const {
  if (id >= terms_.size())
    throw IndexOutOfRange("term id " + std::to_string(id) + " out of range");
  return terms_[id];
}

std::uint32_t Vocabulary::df(std::uint32_t id) const {
  if (id >= df_.size()) throw IndexOutOfRange("term id " + std::to_string(id) + " out of range");
  return df_[id];
}

double SparseVector::l2_norm() const {
  double sum = 0.0;
  for (const auto& [id, w] : entries) sum += w * w;
  return std::sqrt(sum);
}

namespace {

double idf_value(std::size_t n_docs, std::uint32_t df, bool smoothing) {
  const double n = static_cast<double>(n_docs);
  const double d = static_cast<double>(df);
  if (smoothing) return std::log((1.0 + n) / (1.0 + d)) + 1.0;
  return std::log(n / d);
}

}  // namespace

TfIdfModel TfIdfModel::fit(const std::vector<std::vector<Token>>& docs, TfIdfOptions options) {
  if (docs.empty()) throw EmptyCorpus("cannot fit tf-idf on an empty corpus");
  TfIdfModel model;
  model.options_ = options;
  model.vocab_ = Vocabulary::build(docs);
  model.idf_.resize(model.vocab_.size());
  for (std::uint32_t id = 0; id < model.vocab_.size(); ++id)
    model.idf_[id] = idf_value(model.vocab_.n_docs(), model.vocab_.df(id), options.smoothing);
  return model;
}

TfIdfModel TfIdfModel::fit(const Corpus& corpus, TfIdfOptions options) {
  std::vector<std::vector<Token>> docs;
  docs.reserve(corpus.size());
  for (const Document& d : corpus.docs) docs.push_back(d.tokens);
  return fit(docs, options);
}

double TfIdfModel::idf(std::uint32_t id) const {
  if (id >= idf_.size()) throw IndexOutOfRange("term id " + std::to_string(id) + " out of range");
  return idf_[id];
}

SparseVector TfIdfModel::transform(const std::vector<Token>& tokens) const {
  std::unordered_map<std::uint32_t, std::uint32_t> counts;
  for (const Token& t : tokens)
    if (auto id = vocab_.id_of(t)) ++counts[*id];

  SparseVector vec;
  vec.dim = vocab_.size();
  vec.entries.reserve(counts.size());
  for (const auto& [id, tf] : counts) {
    const double weight = static_cast<double>(tf) * idf_[id];
    if (weight != 0.0) vec.entries.emplace_back(id, weight);
  }
  std::sort(vec.entries.begin(), vec.entries.end());

  if (options_.normalize) {
    const double norm = vec.l2_norm();
    if (norm > 0.0)
      for (auto& [id, w] : vec.entries) w /= norm;
  }
  return vec;
}

std::vector<SparseVector> TfIdfModel::transform_corpus(const Corpus& corpus) const {
  std::vector<SparseVector> out;
  out.reserve(corpus.size());
  for (const Document& d : corpus.docs) out.push_back(transform(d.tokens));
  return out;
}

void TfIdfModel::save(const std::string& path) const {
  std::vector<std::uint32_t> df(vocab_.size());
  for (std::uint32_t id = 0; id < vocab_.size(); ++id) df[id] = vocab_.df(id);
  nlohmann::json j{{"vocabulary", vocab_.terms()},
                   {"df", df},
                   {"n_docs", vocab_.n_docs()},
                   {"smoothing", options_.smoothing},
                   {"normalize", options_.normalize}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model dump: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("error writing model dump: " + path);
}

TfIdfModel TfIdfModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model dump: " + path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON", path, 1);
  try {
    TfIdfModel model;
    model.options_.smoothing = j.at("smoothing").get<bool>();
    model.options_.normalize = j.at("normalize").get<bool>();
    model.vocab_ = Vocabulary::from_parts(j.at("vocabulary").get<std::vector<std::string>>(),
                                          j.at("df").get<std::vector<std::uint32_t>>(),
                                          j.at("n_docs").get<std::size_t>());
    model.idf_.resize(model.vocab_.size());
    for (std::uint32_t id = 0; id < model.vocab_.size(); ++id)
      model.idf_[id] =
          idf_value(model.vocab_.n_docs(), model.vocab_.df(id), model.options_.smoothing);
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad model dump: ") + e.what(), path, 1);
  }
}

SparseVector bow_vector(const Vocabulary& vocab, const std::vector<Token>& tokens) {
  std::unordered_map<std::uint32_t, std::uint32_t> counts;
  for (const Token& t : tokens)
    if (auto id = vocab.id_of(t)) ++counts[*id];

  SparseVector vec;
  vec.dim = vocab.size();
  vec.entries.reserve(counts.size());
  for (const auto& [id, tf] : counts) vec.entries.emplace_back(id, static_cast<double>(tf));
  std::sort(vec.entries.begin(), vec.entries.end());
  return vec;
}

void write_vector_dump(const std::string& path, const std::vector<SparseVector>& vectors) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write vector dump: " + path);
  char buf[64];
  for (std::size_t doc = 0; doc < vectors.size(); ++doc) {
    out << doc;
    for (const auto& [id, w] : vectors[doc].entries) {
      std::snprintf(buf, sizeof(buf), " %u:%.6g", id, w);
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw IoError("error writing vector dump: " + path);
}

}  // namespace textsim
