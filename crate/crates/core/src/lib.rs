//! Deterministic in-process simulator of classic Bluetooth piconets and the
//! attack surface around them: surveillance, obfuscation, fuzzing, sniffing,
//! unauthorized data access, audio man-in-the-middle, piconet disruption, and
//! passkey-entry pairing recovery (passive and active) together with the
//! corresponding countermeasures.
//!
//! The simulation is single-threaded and fully seeded: the same scenario and
//! seed produce byte-identical capture logs and results on every run.

pub mod attacks;
pub mod crypto;
pub mod pairing;
pub mod simcore;
pub mod stack;

pub use simcore::{BdAddr, CaptureLog, DeviceClass, DeviceId, DeviceProfile, Packet, Simulation};
