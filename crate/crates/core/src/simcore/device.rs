//! Device profiles: identity, class, security posture, firmware quirks and
//! the personal data an attacker is after.

use serde::{Deserialize, Serialize};

use crate::pairing::PasskeyPolicy;
use crate::stack::ServiceRecord;

use super::addr::BdAddr;
use super::class::DeviceClass;

/// The three classic enforcement levels: none, service-level, link-level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum SecurityMode {
    Mode1,
    Mode2,
    Mode3,
}

impl TryFrom<u8> for SecurityMode {
    type Error = String;
    fn try_from(v: u8) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(SecurityMode::Mode1),
            2 => Ok(SecurityMode::Mode2),
            3 => Ok(SecurityMode::Mode3),
            other => Err(format!("security mode must be 1, 2 or 3, got {other}")),
        }
    }
}

impl From<SecurityMode> for u8 {
    fn from(m: SecurityMode) -> u8 {
        match m {
            SecurityMode::Mode1 => 1,
            SecurityMode::Mode2 => 2,
            SecurityMode::Mode3 => 3,
        }
    }
}

/// Implementation quirks that the attacks exploit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirmwareFlags {
    /// Oversized L2CAP echo payloads crash the device.
    #[serde(default)]
    pub echo_overflow_crash: bool,
    /// OBEX objects are served without any authenticated pairing.
    #[serde(default)]
    pub obex_unauthenticated: bool,
    /// Factory PIN; connections to such devices need no user interaction.
    #[serde(default)]
    pub fixed_pin: Option<String>,
    /// Incoming connections are accepted without prompting.
    #[serde(default)]
    pub auto_accept_connections: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contact {
    pub index: u32,
    pub name: String,
    pub number: String,
}

/// Data served over the AT command endpoint of phones and headsets.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtProfile {
    #[serde(default)]
    pub manufacturer: Option<String>,
    #[serde(default)]
    pub model: Option<String>,
    #[serde(default)]
    pub revision: Option<String>,
    #[serde(default)]
    pub imei: Option<String>,
    #[serde(default)]
    pub capability: Option<String>,
    /// Reply mask for `AT+BRSF=?` feature negotiation.
    #[serde(default = "default_brsf")]
    pub brsf: u32,
}

fn default_brsf() -> u32 {
    63
}

fn default_true() -> bool {
    true
}

fn default_lmp_version() -> (u8, u8, u16) {
    (2, 0, 0x2222)
}

fn default_manufacturer() -> (String, u16) {
    ("Broadcom Corporation".to_string(), 15)
}

fn default_features() -> [u8; 8] {
    [0xbf, 0xee, 0x0f, 0xce, 0x98, 0x39, 0x00, 0x00]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeviceProfile {
    pub addr: BdAddr,
    pub name: String,
    #[serde(default)]
    pub class: DeviceClass,
    #[serde(default)]
    pub security_mode: SecurityMode,
    #[serde(default = "default_true")]
    pub discoverable: bool,
    /// (major, minor, subversion), e.g. (2, 0, 0x2222) for "LMP 2.0 (0x3)".
    #[serde(default = "default_lmp_version")]
    pub lmp_version: (u8, u8, u16),
    #[serde(default = "default_manufacturer")]
    pub manufacturer: (String, u16),
    #[serde(default = "default_features")]
    pub features: [u8; 8],
    #[serde(default)]
    pub services: Vec<ServiceRecord>,
    #[serde(default)]
    pub contacts: Vec<Contact>,
    #[serde(default)]
    pub calendar: Vec<String>,
    #[serde(default)]
    pub messages: Vec<String>,
    #[serde(default)]
    pub firmware: FirmwareFlags,
    /// Whether the simulated owner accepts connection prompts.
    #[serde(default = "default_true")]
    pub user_accepts: bool,
    /// PIN the simulated owner types when legacy pairing asks for one.
    #[serde(default)]
    pub user_pin: Option<String>,
    /// Passkey source for passkey-entry pairing; None means no automatic
    /// pairing agent.
    #[serde(default)]
    pub passkey_policy: Option<PasskeyPolicy>,
    #[serde(default)]
    pub at: AtProfile,
    /// Audio a headset's microphone picks up, drained over SCO.
    #[serde(default)]
    pub ambient_audio: Vec<u8>,
}

impl Default for SecurityMode {
    fn default() -> Self {
        SecurityMode::Mode1
    }
}

impl Default for DeviceClass {
    fn default() -> Self {
        DeviceClass(0)
    }
}

impl DeviceProfile {
    pub fn new(addr: BdAddr, name: &str) -> Self {
        DeviceProfile {
            addr,
            name: name.to_string(),
            class: DeviceClass::default(),
            security_mode: SecurityMode::Mode1,
            discoverable: true,
            lmp_version: default_lmp_version(),
            manufacturer: default_manufacturer(),
            features: default_features(),
            services: Vec::new(),
            contacts: Vec::new(),
            calendar: Vec::new(),
            messages: Vec::new(),
            firmware: FirmwareFlags::default(),
            user_accepts: true,
            user_pin: None,
            passkey_policy: None,
            at: AtProfile::default(),
            ambient_audio: Vec::new(),
        }
    }

    /// "2.0 (0x3)" style LMP version text.
    pub fn lmp_version_text(&self) -> String {
        let (major, minor, _) = self.lmp_version;
        let code: u8 = match (major, minor) {
            (1, 0) => 0,
            (1, 1) => 1,
            (1, 2) => 2,
            (2, 0) => 3,
            (2, 1) => 4,
            (3, 0) => 5,
            (4, 0) => 6,
            _ => 0xff,
        };
        format!("{major}.{minor} (0x{code:x})")
    }

    pub fn manufacturer_text(&self) -> String {
        format!("{} ({})", self.manufacturer.0, self.manufacturer.1)
    }

    pub fn features_text(&self) -> String {
        self.features
            .iter()
            .map(|b| format!("0x{b:02x}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}
