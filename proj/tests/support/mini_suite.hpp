#pragma once

// Loads the synthetic four-wordnet suite under fixtures/mini.

#include <filesystem>
#include <memory>

#include "wnsynth/translation.hpp"
#include "wnsynth/wn_data.hpp"

namespace mini {

inline std::filesystem::path dir() { return std::filesystem::path(WNSYNTH_FIXTURE_DIR) / "mini"; }

inline wnsynth::WordnetTable pwn() {
  using wnsynth::Pos;
  auto table = wnsynth::load_wndb(dir() / "data.noun", Pos::Noun);
  table.merge(wnsynth::load_wndb(dir() / "data.verb", Pos::Verb));
  table.merge(wnsynth::load_wndb(dir() / "data.adj", Pos::Adjective));
  table.merge(wnsynth::load_wndb(dir() / "data.adv", Pos::Adverb));
  return table;
}

struct Suite {
  wnsynth::WordnetTable pwn = mini::pwn();
  wnsynth::WordnetTable fwn = wnsynth::load_omw_tab(dir() / "fwn.tab", "FWN", "fin");
  wnsynth::WordnetTable jwn = wnsynth::load_omw_tab(dir() / "jwn.tab", "JWN", "jpn");
  wnsynth::WordnetTable wwn = wnsynth::load_omw_tab(dir() / "wwn.tab", "WWN", "fra");
  std::shared_ptr<wnsynth::MockTranslationProvider> mt_vie =
      wnsynth::MockTranslationProvider::load(dir() / "mt_vie.tsv", "mock-mt");
  std::shared_ptr<wnsynth::MockTranslationProvider> mt_eng =
      wnsynth::MockTranslationProvider::load(dir() / "mt_eng.tsv", "mock-mt-eng");
  std::shared_ptr<wnsynth::DictionaryProvider> dict = std::make_shared<wnsynth::DictionaryProvider>(
      "dict", std::make_shared<wnsynth::BilingualDictionary>(
                  wnsynth::load_dictionary_tsv(dir() / "dict_eng_dis.tsv", "eng", "dis")));

  wnsynth::ProviderRegistry vie_registry() const {
    wnsynth::ProviderRegistry reg;
    for (const char* src : {"eng", "fin", "jpn", "fra"}) reg.assign({src, "vie"}, mt_vie);
    return reg;
  }

  wnsynth::ProviderRegistry dis_registry() const {
    wnsynth::ProviderRegistry reg;
    for (const char* src : {"fin", "jpn", "fra"}) reg.assign({src, "eng"}, mt_eng);
    reg.assign({"eng", "dis"}, dict);
    return reg;
  }
};

}  // namespace mini
