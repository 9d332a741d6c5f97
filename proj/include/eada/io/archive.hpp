#pragma once

#include <cstdint>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eada/ad/var.hpp"
#include "eada/core/tensor.hpp"

namespace eada::io {

template <typename T>
constexpr const char* dtype_tag();
template <>
constexpr const char* dtype_tag<float>() {
    return "f32";
}
template <>
constexpr const char* dtype_tag<double>() {
    return "f64";
}

/// Named-tensor container with a free-form JSON header, serialized as a single
/// binary file (checkpoints, optimizer state). Entries are stored sorted by
/// key, so the byte stream is independent of insertion order.
class TensorArchive {
  public:
    nlohmann::json& meta() { return meta_; }
    const nlohmann::json& meta() const { return meta_; }

    template <typename T>
    void put(const std::string& key, const Tensor<T>& t) {
        Entry e;
        e.dtype = dtype_tag<T>();
        e.shape = t.shape();
        e.raw.resize(t.numel() * sizeof(T));
        std::memcpy(e.raw.data(), t.data(), e.raw.size());
        entries_[key] = std::move(e);
    }

    template <typename T>
    Tensor<T> get(const std::string& key) const {
        const Entry& e = find(key);
        if (e.dtype != dtype_tag<T>())
            throw std::runtime_error("archive: dtype mismatch for '" + key + "' (stored " +
                                     e.dtype + ")");
        Tensor<T> t(e.shape);
        std::memcpy(t.data(), e.raw.data(), e.raw.size());
        return t;
    }

    bool contains(const std::string& key) const { return entries_.count(key) != 0; }
    std::vector<std::string> keys() const;
    size_t size() const { return entries_.size(); }

    void save(const std::string& path) const;
    static TensorArchive load(const std::string& path);

  private:
    struct Entry {
        std::string dtype;
        std::vector<int64_t> shape;
        std::vector<unsigned char> raw;
    };

    const Entry& find(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) throw std::runtime_error("archive: missing tensor '" + key + "'");
        return it->second;
    }

    nlohmann::json meta_ = nlohmann::json::object();
    std::map<std::string, Entry> entries_;
};

/// Store every parameter under its name.
template <typename T>
void put_params(TensorArchive& a, const std::vector<ad::Param<T>*>& params) {
    for (const auto* p : params) a.put(p->name, *p->value);
}

/// Restore parameter values by name; shapes must match the live parameters.
template <typename T>
void load_params(const TensorArchive& a, const std::vector<ad::Param<T>*>& params) {
    for (auto* p : params) {
        Tensor<T> t = a.get<T>(p->name);
        if (!t.same_shape(*p->value))
            throw std::runtime_error("archive: shape mismatch for '" + p->name + "'");
        *p->value = std::move(t);
    }
}

}  // namespace eada::io
