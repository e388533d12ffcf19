#pragma once

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace lensskein::detail {

// Insert-only memo table. Values are computed outside the lock; when two
// threads race on a key the first insertion wins and both observe it.
// References stay valid because entries are never erased.
template <class K, class V, class H>
class Memo {
public:
    const V* find(const K& k) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(k);
        return it == map_.end() ? nullptr : &it->second;
    }

    const V& insert(const K& k, V v) {
        std::unique_lock lock(mu_);
        return map_.try_emplace(k, std::move(v)).first->second;
    }

    template <class F>
    const V& get(const K& k, F&& compute) {
        if (const V* v = find(k)) return *v;
        return insert(k, compute());
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return map_.size();
    }

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<K, V, H> map_;
};

}  // namespace lensskein::detail
