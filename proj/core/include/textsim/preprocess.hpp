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
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace textsim {

/// A normalized token: non-empty, alphabetic only, lowercase when the
/// pipeline runs with lowercasing on (the default).
using Token = std::string;

struct PreprocessConfig {
  bool lowercase = true;
  std::size_t min_token_length = 2;  // must be >= 1
  std::string stopword_path;         // empty means no stopword list
  std::string lexicon_path;          // empty means identity lemmatizer
};

/// Exact-match stopword set. Entries are stored lowercase and queries are
/// lowercased before lookup, so matching is case-insensitive.
class StopwordList {
 public:
  StopwordList() = default;

  /// UTF-8 file, one word per line; '#' comment lines and blank lines ignored.
  static StopwordList load(const std::string& path);

  void insert(std::string_view word);
  bool contains(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
};

/// Surface-form to lemma lookup table with identity fallback for unknown
/// words. Both sides are stored lowercase.
class LemmaLexicon {
 public:
  LemmaLexicon() = default;

  /// UTF-8 TSV file, `surface<TAB>lemma` per line; '#' comments and blank
  /// lines ignored.
  static LemmaLexicon load(const std::string& path);

  void add(std::string_view surface, std::string_view lemma);
  const std::string& lemma_of(const std::string& token) const;
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, std::string> map_;
};

/// Splits raw text into maximal runs of ASCII letters, lowercased when
/// configured, keeping only tokens of length >= min_token_length. Digits,
/// punctuation, whitespace and multi-byte UTF-8 sequences all act as
/// separators, which is well defined on UTF-8 input.
std::vector<Token> tokenize(std::string_view raw, const PreprocessConfig& config = {});

/// Removes every token whose lowercased surface is in `stops`, preserving
/// relative order.
std::vector<Token> remove_stopwords(std::vector<Token> tokens, const StopwordList& stops);

/// Lexicon lookup with identity fallback.
Token lemmatize(const Token& token, const LemmaLexicon& lexicon);

/// tokenize -> remove_stopwords -> lemmatize, in that order. Stopwords are
/// filtered before lemmatization so inflected stoplist entries ("are") are
/// dropped rather than lemmatized into content words.
std::vector<Token> preprocess(std::string_view raw, const PreprocessConfig& config,
                              const StopwordList& stops, const LemmaLexicon& lexicon);

}  // namespace textsim
