//! Simulated frames and capture logs.
//!
//! Packets are semantic, not bit-exact: each carries a layer, a kind and a
//! payload, and renders to hcidump-style text in the sniff formatter.

use serde::{Deserialize, Serialize};

use super::addr::BdAddr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Sent,
    Received,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HciCmdKind {
    Inquiry,
    CreateConnection,
    RemoteNameRequest,
    AuthenticationRequested,
    ReadRssi,
    ReadLinkQuality,
    ReadTxPowerLevel,
    PinCodeRequestReply,
    DeleteStoredLinkKey,
}

impl HciCmdKind {
    pub fn label(self) -> &'static str {
        match self {
            HciCmdKind::Inquiry => "Inquiry",
            HciCmdKind::CreateConnection => "Create Connection",
            HciCmdKind::RemoteNameRequest => "Remote Name Request",
            HciCmdKind::AuthenticationRequested => "Authentication Requested",
            HciCmdKind::ReadRssi => "Read RSSI",
            HciCmdKind::ReadLinkQuality => "Read Link Quality",
            HciCmdKind::ReadTxPowerLevel => "Read Tx Power Level",
            HciCmdKind::PinCodeRequestReply => "PIN Code Request Reply",
            HciCmdKind::DeleteStoredLinkKey => "Delete Stored Link Key",
        }
    }

    /// (OGF, OCF) opcode halves as printed by packet analyzers.
    pub fn opcode(self) -> (u8, u16) {
        match self {
            HciCmdKind::Inquiry => (0x01, 0x0001),
            HciCmdKind::CreateConnection => (0x01, 0x0005),
            HciCmdKind::RemoteNameRequest => (0x01, 0x0019),
            HciCmdKind::AuthenticationRequested => (0x01, 0x0011),
            HciCmdKind::ReadRssi => (0x05, 0x0005),
            HciCmdKind::ReadLinkQuality => (0x05, 0x0003),
            HciCmdKind::ReadTxPowerLevel => (0x03, 0x002d),
            HciCmdKind::PinCodeRequestReply => (0x01, 0x000d),
            HciCmdKind::DeleteStoredLinkKey => (0x03, 0x0012),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HciEvtKind {
    InquiryResult,
    ConnectComplete,
    DisconnectComplete,
    AuthComplete,
    RemoteNameRequestComplete,
    ReadRemoteSupportedFeatures,
    CommandStatus,
    PinCodeRequest,
}

impl HciEvtKind {
    pub fn label(self) -> &'static str {
        match self {
            HciEvtKind::InquiryResult => "Inquiry Result",
            HciEvtKind::ConnectComplete => "Connect Complete",
            HciEvtKind::DisconnectComplete => "Disconnect Complete",
            HciEvtKind::AuthComplete => "Auth Complete",
            HciEvtKind::RemoteNameRequestComplete => "Remote Name Request Complete",
            HciEvtKind::ReadRemoteSupportedFeatures => "Read Remote Supported Features",
            HciEvtKind::CommandStatus => "Command Status",
            HciEvtKind::PinCodeRequest => "PIN Code Request",
        }
    }

    pub fn code(self) -> u8 {
        match self {
            HciEvtKind::InquiryResult => 0x02,
            HciEvtKind::ConnectComplete => 0x03,
            HciEvtKind::DisconnectComplete => 0x05,
            HciEvtKind::AuthComplete => 0x06,
            HciEvtKind::RemoteNameRequestComplete => 0x07,
            HciEvtKind::ReadRemoteSupportedFeatures => 0x0b,
            HciEvtKind::CommandStatus => 0x0f,
            HciEvtKind::PinCodeRequest => 0x16,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum L2capKind {
    InformationRequest,
    InformationResponse,
    ConnectionRequest,
    ConnectionResponse,
    ConfigureRequest,
    ConnectionOrientedChannel,
    EchoRequest,
    EchoResponse,
    PairingPublicKey,
    PairingCommitment,
    PairingNonce,
    PairingComplete,
    PairingFailed,
}

impl L2capKind {
    pub fn label(self) -> &'static str {
        match self {
            L2capKind::InformationRequest => "Information Request",
            L2capKind::InformationResponse => "Information Response",
            L2capKind::ConnectionRequest => "Connection Request",
            L2capKind::ConnectionResponse => "Connection Response",
            L2capKind::ConfigureRequest => "Configure Request",
            L2capKind::ConnectionOrientedChannel => "Connection-oriented channel",
            L2capKind::EchoRequest => "Echo Request",
            L2capKind::EchoResponse => "Echo Response",
            L2capKind::PairingPublicKey => "Pairing Public Key",
            L2capKind::PairingCommitment => "Pairing Commitment",
            L2capKind::PairingNonce => "Pairing Nonce",
            L2capKind::PairingComplete => "Pairing Complete",
            L2capKind::PairingFailed => "Pairing Failed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Layer {
    HciCmd {
        kind: HciCmdKind,
        params: Vec<u8>,
    },
    HciEvt {
        kind: HciEvtKind,
        params: Vec<u8>,
    },
    L2cap {
        kind: L2capKind,
        /// CID for data frames, PSM for connection requests, 0 otherwise.
        chan: u16,
        payload: Vec<u8>,
    },
    Rfcomm {
        channel: u8,
        payload: Vec<u8>,
    },
    Sco {
        handle: u8,
        payload: Vec<u8>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packet {
    pub direction: Direction,
    pub logical_time: u64,
    pub src: BdAddr,
    pub dst: BdAddr,
    pub layer: Layer,
}

impl Packet {
    /// Stable one-line kind label, e.g. "HCI_CMD Create Connection".
    pub fn kind_label(&self) -> String {
        match &self.layer {
            Layer::HciCmd { kind, .. } => format!("HCI_CMD {}", kind.label()),
            Layer::HciEvt { kind, .. } => format!("HCI_EVT {}", kind.label()),
            Layer::L2cap { kind, .. } => format!("L2CAP {}", kind.label()),
            Layer::Rfcomm { .. } => "RFCOMM data".to_string(),
            Layer::Sco { .. } => "SCO data".to_string(),
        }
    }

    pub fn payload(&self) -> &[u8] {
        match &self.layer {
            Layer::HciCmd { params, .. } | Layer::HciEvt { params, .. } => params,
            Layer::L2cap { payload, .. }
            | Layer::Rfcomm { payload, .. }
            | Layer::Sco { payload, .. } => payload,
        }
    }
}

/// Identity of a medium tap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TapId(pub u32);

/// Ordered, append-only record of everything a tap observed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaptureLog {
    pub tap: TapId,
    pub packets: Vec<Packet>,
}

impl CaptureLog {
    pub fn new(tap: TapId) -> Self {
        CaptureLog { tap, packets: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.packets.is_empty()
    }

    pub fn len(&self) -> usize {
        self.packets.len()
    }
}
