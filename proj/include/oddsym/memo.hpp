#pragma once

#include <map>
#include <mutex>

namespace oddsym {

// process-wide cache lock; values are computed outside the lock
std::recursive_mutex& memo_mutex();

template <class K, class V>
struct Memo {
  std::map<K, V> m;
  template <class F>
  V get(const K& k, F&& f) {
    {
      std::lock_guard<std::recursive_mutex> lk(memo_mutex());
      auto it = m.find(k);
      if (it != m.end()) return it->second;
    }
    V v = f();
    std::lock_guard<std::recursive_mutex> lk(memo_mutex());
    m.emplace(k, v);
    return v;
  }
};

}  // namespace oddsym
