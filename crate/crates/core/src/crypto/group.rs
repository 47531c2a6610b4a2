//! Pluggable key-exchange group. The default is modular exponentiation over
//! a fixed 256-bit safe prime; a tiny prime group (p = 23, g = 5) is provided
//! so tests can brute-force discrete logs.

use num_bigint::BigUint;
use num_traits::One;
use rand::RngCore;

use super::CryptoError;

/// Public half of a key pair, encoded big-endian and padded to the group's
/// element length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublicKey(Vec<u8>);

/// Secret exponent. Never leaves the owning party.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecretKey(Vec<u8>);

/// Shared Diffie-Hellman secret. Never transmitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DhKey(Vec<u8>);

macro_rules! byte_newtype {
    ($ty:ident) => {
        impl $ty {
            pub fn from_bytes(bytes: Vec<u8>) -> Self {
                $ty(bytes)
            }
            pub fn as_bytes(&self) -> &[u8] {
                &self.0
            }
        }
    };
}

byte_newtype!(PublicKey);
byte_newtype!(SecretKey);
byte_newtype!(DhKey);

pub trait DhGroup {
    /// Encoded element length in bytes.
    fn element_len(&self) -> usize;

    /// Draw a key pair from the given RNG. Deterministic under a fixed seed.
    fn keygen(&self, rng: &mut dyn RngCore) -> (SecretKey, PublicKey);

    /// Combine our secret with the peer's public value.
    fn shared(&self, secret: &SecretKey, public: &PublicKey) -> Result<DhKey, CryptoError>;
}

/// Multiplicative group modulo a prime.
#[derive(Debug, Clone)]
pub struct ModpGroup {
    prime: BigUint,
    generator: BigUint,
    element_len: usize,
}

/// 256-bit safe prime (p = 2q + 1 with q prime); g = 4 generates the
/// q-order subgroup.
const DEFAULT_PRIME_HEX: &str = "b26e5666922f0985a44d41e728c3da23709851096af89b950ab410e7f1a1a6c7";

impl ModpGroup {
    pub fn new(prime: BigUint, generator: BigUint) -> Self {
        let element_len = (prime.bits() as usize + 7) / 8;
        ModpGroup { prime, generator, element_len }
    }

    pub fn default_group() -> Self {
        let prime = BigUint::parse_bytes(DEFAULT_PRIME_HEX.as_bytes(), 16).unwrap();
        ModpGroup::new(prime, BigUint::from(4u8))
    }

    /// p = 23, g = 5. Small enough to brute-force in tests.
    pub fn tiny() -> Self {
        ModpGroup::new(BigUint::from(23u8), BigUint::from(5u8))
    }

    fn encode(&self, value: &BigUint) -> Vec<u8> {
        let raw = value.to_bytes_be();
        let mut out = vec![0u8; self.element_len - raw.len()];
        out.extend_from_slice(&raw);
        out
    }

    /// Build the key pair for an explicit secret exponent.
    pub fn keypair_from_secret(&self, secret: &BigUint) -> (SecretKey, PublicKey) {
        let public = self.generator.modpow(secret, &self.prime);
        (
            SecretKey(self.encode(secret)),
            PublicKey(self.encode(&public)),
        )
    }
}

impl DhGroup for ModpGroup {
    fn element_len(&self) -> usize {
        self.element_len
    }

    fn keygen(&self, rng: &mut dyn RngCore) -> (SecretKey, PublicKey) {
        let one = BigUint::one();
        let upper = &self.prime - &one;
        loop {
            let mut buf = vec![0u8; self.element_len + 8];
            rng.fill_bytes(&mut buf);
            // uniform-enough secret in [2, p-2]
            let span = &self.prime - BigUint::from(3u8);
            let secret = BigUint::from_bytes_be(&buf) % span + BigUint::from(2u8);
            let (sk, pk) = self.keypair_from_secret(&secret);
            // redraw the rare publics that shared() would reject
            let value = BigUint::from_bytes_be(pk.as_bytes());
            if value > one && value < upper {
                return (sk, pk);
            }
        }
    }

    fn shared(&self, secret: &SecretKey, public: &PublicKey) -> Result<DhKey, CryptoError> {
        let pk = BigUint::from_bytes_be(public.as_bytes());
        let one = BigUint::one();
        if pk <= one || pk >= &self.prime - &one {
            return Err(CryptoError::InvalidPublic);
        }
        let sk = BigUint::from_bytes_be(secret.as_bytes());
        Ok(DhKey(self.encode(&pk.modpow(&sk, &self.prime))))
    }
}
