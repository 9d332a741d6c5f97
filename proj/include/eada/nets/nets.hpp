#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eada/ad/ops.hpp"
#include "eada/ad/var.hpp"
#include "eada/core/rng.hpp"
#include "eada/core/tensor.hpp"

namespace eada::nets {

/// Topology constants for one model family. All convolutions are unpadded; the
/// kernel/stride choices below make the decoder land exactly on image x image.
struct NetDims {
    int64_t image = 32;  // input height == width
    int64_t classes = 10;
    // classifier: conv(3,c1,ck) pool conv(c1,c2,ck) pool | fc(feat,hidden) x2, fc(hidden,classes)
    int64_t c1 = 64, c2 = 128, ck = 5, hidden = 1024;
    // encoder: conv(3,e1,ek) conv(e1,e2,ek) conv(e2,e3,ek) conv(e3,e4,ek,stride2)
    int64_t e1 = 32, e2 = 64, e3 = 64, e4 = 128, ek = 3;
    // decoder: convT(e4+c2,d1,k4,s2) convT(d1,d2,k3) convT(d2,d3,k3) convT(d3,6,k3)
    int64_t d1 = 64, d2 = 64, d3 = 32;
    std::string arch_tag = "small_scale";

    int64_t feat_h() const {
        int64_t h = (image - ck + 1) / 2;  // conv then 2x2 pool
        return (h - ck + 1) / 2;
    }
    int64_t feat_dim() const { return c2 * feat_h() * feat_h(); }
    int64_t enc_h() const { return (image - 3 * (ek - 1) - ek) / 2 + 1; }
    int64_t dec_in_ch() const { return e4 + c2; }
    int64_t dec_out_h() const { return (enc_h() - 1) * 2 + 4 + 3 * 2; }

    static NetDims small_scale() { return {}; }
    /// Shrunken topology with the same layer structure, for fast exact tests.
    static NetDims tiny();
};

template <typename T>
using Param = ad::Param<T>;
template <typename T>
using Var = ad::Var<T>;

/// LeNet-style classifier split into a convolutional feature extractor and a
/// fully connected head; used for both the shortcut probe C0 and the final Cf.
template <typename T>
struct ClassifierBundle {
    NetDims dims;
    Param<T> conv1_w, conv1_b, conv2_w, conv2_b;        // feature extractor
    Param<T> fc1_w, fc1_b, fc2_w, fc2_b, fc3_w, fc3_b;  // head

    ClassifierBundle(const NetDims& d, const std::string& prefix, Rng rng);

    /// Activations after the second pooling stage: (N, c2, feat_h, feat_h).
    Var<T> features(const Var<T>& x, bool trainable = true) const;
    /// Head on a feature map: flatten, two hidden relu layers, linear logits.
    Var<T> head(const Var<T>& feat, bool trainable = true) const;
    /// head(features(x)); logits are pre-softmax, shape (N, classes).
    Var<T> logits(const Var<T>& x, bool trainable = true) const;

    std::vector<Param<T>*> feature_params();
    std::vector<Param<T>*> head_params();
    std::vector<Param<T>*> params();
};

/// Four-conv encoder; final conv has stride 2. Output (N, e4, enc_h, enc_h).
template <typename T>
struct EncoderBundle {
    NetDims dims;
    Param<T> conv1_w, conv1_b, conv2_w, conv2_b, conv3_w, conv3_b, conv4_w, conv4_b;

    EncoderBundle(const NetDims& d, const std::string& prefix, Rng rng);

    Var<T> forward(const Var<T>& x, bool trainable = true) const;
    std::vector<Param<T>*> params();
};

template <typename T>
struct DecoderOut {
    Var<T> recon;     // channels 0-2 of the 6-channel output
    Var<T> entropic;  // channels 3-5
};

/// Four transposed convolutions ending in tanh; the 6 output channels split
/// into two images that share every layer except the final filters.
template <typename T>
struct DecoderBundle {
    NetDims dims;
    Param<T> deconv1_w, deconv1_b, deconv2_w, deconv2_b, deconv3_w, deconv3_b, deconv4_w,
        deconv4_b;

    DecoderBundle(const NetDims& d, const std::string& prefix, Rng rng);

    DecoderOut<T> forward(const Var<T>& fused, bool trainable = true) const;
    std::vector<Param<T>*> params();
};

/// Resize `feat` to the spatial size of `enc_out` (nearest neighbor) and
/// concatenate along channels, encoder channels first.
template <typename T>
Var<T> fuse(const Var<T>& enc_out, const Var<T>& feat);

/// The four networks of the method, seeded deterministically.
template <typename T>
struct MethodNets {
    NetDims dims;
    ClassifierBundle<T> c0;
    ClassifierBundle<T> cf;
    EncoderBundle<T> enc;
    DecoderBundle<T> dec;

    MethodNets(const NetDims& d, uint64_t seed);

    /// fuse(E(x_lat), F0(x_feat)) pushed through the decoder.
    DecoderOut<T> decode_pair(const Var<T>& x_lat, const Var<T>& x_feat,
                              bool trainable = true) const;
    std::vector<Param<T>*> params();
};

}  // namespace eada::nets
