//! Key-exchange group abstraction, the nonce-keyed commitment function used
//! by passkey-entry pairing, and the keystream behind the hardened
//! (encrypted-round) pairing variant.

mod group;
mod hmac_sha256;

pub use group::{DhGroup, DhKey, ModpGroup, PublicKey, SecretKey};
pub use hmac_sha256::hmac_sha256;

use rand::RngCore;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CryptoError {
    /// The peer's public value is not an element of the group.
    #[error("public value outside the group")]
    InvalidPublic,
}

/// 16-octet random nonce, one per party per pairing round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Nonce(pub [u8; 16]);

impl Nonce {
    pub fn random(rng: &mut dyn RngCore) -> Self {
        let mut bytes = [0u8; 16];
        rng.fill_bytes(&mut bytes);
        Nonce(bytes)
    }
}

/// 16-octet commitment to a single passkey bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Commitment(pub [u8; 16]);

/// Commit to one passkey bit under a fresh nonce.
///
/// The commitment is HMAC-SHA256 keyed by the nonce over
/// `pk_a || pk_b || z`, where `z` is the single octet `0x80 | bit`,
/// truncated to its 16 most significant octets.
pub fn commit(pk_a: &PublicKey, pk_b: &PublicKey, nonce: &Nonce, bit: u8) -> Commitment {
    debug_assert!(bit <= 1);
    let mut msg = Vec::with_capacity(pk_a.as_bytes().len() + pk_b.as_bytes().len() + 1);
    msg.extend_from_slice(pk_a.as_bytes());
    msg.extend_from_slice(pk_b.as_bytes());
    msg.push(0x80 | (bit & 1));
    let mac = hmac_sha256(&nonce.0, &msg);
    let mut out = [0u8; 16];
    out.copy_from_slice(&mac[..16]);
    Commitment(out)
}

/// Deterministic keystream for one pairing round, derived from the shared
/// DH key. Only the two legitimate parties can reproduce it.
pub fn keystream(dh_key: &DhKey, round: u32, len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    let mut counter: u32 = 0;
    while out.len() < len {
        let mut msg = [0u8; 8];
        msg[..4].copy_from_slice(&round.to_be_bytes());
        msg[4..].copy_from_slice(&counter.to_be_bytes());
        out.extend_from_slice(&hmac_sha256(dh_key.as_bytes(), &msg));
        counter += 1;
    }
    out.truncate(len);
    out
}

/// XOR a value with a keystream slice in place.
pub fn xor_with(data: &mut [u8], stream: &[u8]) {
    for (b, s) in data.iter_mut().zip(stream) {
        *b ^= s;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    #[test]
    fn commit_is_deterministic() {
        let g = ModpGroup::tiny();
        let mut r = rng();
        let (_, p) = g.keygen(&mut r);
        let (_, q) = g.keygen(&mut r);
        let n = Nonce::random(&mut r);
        assert_eq!(commit(&p, &q, &n, 0), commit(&p, &q, &n, 0));
    }

    #[test]
    fn commit_separates_bits() {
        let g = ModpGroup::tiny();
        let mut r = rng();
        let (_, p) = g.keygen(&mut r);
        let (_, q) = g.keygen(&mut r);
        let n = Nonce::random(&mut r);
        assert_ne!(commit(&p, &q, &n, 0), commit(&p, &q, &n, 1));
    }

    #[test]
    fn commit_matches_frozen_vector() {
        // Golden value computed by an independent HMAC-SHA256 implementation
        // validated against the RFC 4231 vectors.
        let pk = PublicKey::from_bytes(vec![0x01; 32]);
        let nonce = Nonce(core::array::from_fn(|i| i as u8));
        let c0 = commit(&pk, &pk, &nonce, 0);
        let c1 = commit(&pk, &pk, &nonce, 1);
        assert_eq!(hex::encode(c0.0), "6f6e02b0b6c46b3ca5f55de0ef687d3a");
        assert_eq!(hex::encode(c1.0), "4f9b28b74f3d0e11cc380bcc7ad01203");
    }

    #[test]
    fn commit_agrees_with_independent_hmac() {
        use hmac::{Hmac, Mac};
        let g = ModpGroup::default_group();
        let mut r = rng();
        let (_, p) = g.keygen(&mut r);
        let (_, q) = g.keygen(&mut r);
        let n = Nonce::random(&mut r);
        let ours = commit(&p, &q, &n, 1);

        let mut mac = Hmac::<sha2::Sha256>::new_from_slice(&n.0).unwrap();
        mac.update(p.as_bytes());
        mac.update(q.as_bytes());
        mac.update(&[0x81]);
        let reference = mac.finalize().into_bytes();
        assert_eq!(&ours.0[..], &reference[..16]);
    }

    #[test]
    fn keystream_is_pure_and_round_separated() {
        let key = DhKey::from_bytes(vec![9; 32]);
        assert_eq!(keystream(&key, 1, 64), keystream(&key, 1, 64));
        assert_ne!(keystream(&key, 1, 64), keystream(&key, 2, 64));
        assert_eq!(keystream(&key, 3, 100).len(), 100);
    }

    #[test]
    fn xor_is_an_involution() {
        let key = DhKey::from_bytes(vec![3; 32]);
        let stream = keystream(&key, 5, 16);
        let original: Vec<u8> = (0..16).collect();
        let mut data = original.clone();
        xor_with(&mut data, &stream);
        assert_ne!(data, original);
        xor_with(&mut data, &stream);
        assert_eq!(data, original);
    }

    #[test]
    fn commitment_binding_over_random_inputs() {
        let g = ModpGroup::tiny();
        let mut r = rng();
        for _ in 0..10_000 {
            let (_, p) = g.keygen(&mut r);
            let (_, q) = g.keygen(&mut r);
            let n = Nonce::random(&mut r);
            assert_ne!(commit(&p, &q, &n, 0), commit(&p, &q, &n, 1));
        }
    }

    #[test]
    fn commitment_byte_frequencies_look_alike() {
        // Sanity check, not a proof: byte histograms for bit-0 and bit-1
        // commitments over fresh nonces should not be separable.
        let g = ModpGroup::default_group();
        let mut r = rng();
        let (_, p) = g.keygen(&mut r);
        let (_, q) = g.keygen(&mut r);
        let mut hist = [[0u32; 256]; 2];
        for _ in 0..2000 {
            let n = Nonce::random(&mut r);
            for bit in 0..2u8 {
                for byte in commit(&p, &q, &n, bit).0 {
                    hist[bit as usize][byte as usize] += 1;
                }
            }
        }
        let mut chi2 = 0.0f64;
        for v in 0..256 {
            let (a, b) = (hist[0][v] as f64, hist[1][v] as f64);
            if a + b > 0.0 {
                chi2 += (a - b) * (a - b) / (a + b);
            }
        }
        // df = 255; far tail would indicate the bit leaks into the bytes
        assert!(chi2 < 350.0, "chi-square too large: {chi2}");
    }
}
