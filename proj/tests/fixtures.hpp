#pragma once

#include <string>

#include "leveltree/io.hpp"

namespace fixture {

inline std::string data_path(const std::string& name) {
  return std::string(LT_TEST_DATA_DIR) + "/" + name;
}

inline leveltree::TreeDocument load(const std::string& name) {
  return leveltree::load_tree_document(data_path(name));
}

inline leveltree::LevelTree fig1() { return load("fig1.json").level_tree(); }
inline leveltree::LevelTree fig2() { return load("fig2.json").level_tree(); }

inline leveltree::LevelTree tree(const std::string& json) {
  return leveltree::parse_tree_document(json).level_tree();
}

}  // namespace fixture
