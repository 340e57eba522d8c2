/**
 * textsim — semantic text similarity toolkit
 *
 * Copyright (c) 2026 The textsim Authors
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "textsim/preprocess.hpp"

#include <fstream>

#include "textsim/error.hpp"

namespace textsim {

namespace {

bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + ('a' - 'A')) : c;
}

std::string ascii_lower_copy(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(ascii_lower(c));
  return out;
}

// Strips trailing '\r' and surrounding spaces/tabs.
std::string_view trimmed(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
    line.remove_suffix(1);
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
  return line;
}

}  // namespace

StopwordList StopwordList::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stopword file: " + path);
  StopwordList stops;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view word = trimmed(line);
    if (word.empty() || word.front() == '#') continue;
    stops.insert(word);
  }
  return stops;
}

void StopwordList::insert(std::string_view word) { entries_.insert(ascii_lower_copy(word)); }

bool StopwordList::contains(std::string_view word) const {
  if (entries_.empty()) return false;
  return entries_.count(ascii_lower_copy(word)) > 0;
}

LemmaLexicon LemmaLexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lemma lexicon: " + path);
  LemmaLexicon lexicon;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view entry = trimmed(line);
    if (entry.empty() || entry.front() == '#') continue;
    auto tab = entry.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == entry.size())
      throw ParseError("expected `surface<TAB>lemma`", path, lineno);
    lexicon.add(entry.substr(0, tab), entry.substr(tab + 1));
  }
  return lexicon;
}

void LemmaLexicon::add(std::string_view surface, std::string_view lemma) {
  map_[ascii_lower_copy(surface)] = ascii_lower_copy(lemma);
}

const std::string& LemmaLexicon::lemma_of(const std::string& token) const {
  auto it = map_.find(token);
  return it == map_.end() ? token : it->second;
}

std::vector<Token> tokenize(std::string_view raw, const PreprocessConfig& config) {
  std::vector<Token> tokens;
  std::string current;
  auto flush = [&] {
    if (current.size() >= config.min_token_length) tokens.push_back(current);
    current.clear();
  };
  for (char c : raw) {
    if (is_ascii_alpha(c)) {
      current.push_back(config.lowercase ? ascii_lower(c) : c);
    } else if (!current.empty()) {
      flush();
    }
  }
  flush();
  return tokens;
}

std::vector<Token> remove_stopwords(std::vector<Token> tokens, const StopwordList& stops) {
  std::erase_if(tokens, [&](const Token& t) { return stops.contains(t); });
  return tokens;
}

Token lemmatize(const Token& token, const LemmaLexicon& lexicon) { return lexicon.lemma_of(token); }

std::vector<Token> preprocess(std::string_view raw, const PreprocessConfig& config,
                              const StopwordList& stops, const LemmaLexicon& lexicon) {
  std::vector<Token> tokens = remove_stopwords(tokenize(raw, config), stops);
  for (Token& t : tokens) t = lexicon.lemma_of(t);
  return tokens;
}

}  // namespace textsim
