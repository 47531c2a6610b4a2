//! Class-of-device decoding.
//!
//! The 24-bit CoD packs service-class bits into positions 13-23, the major
//! device class into bits 8-12 and the minor class into bits 2-7.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeviceClass(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MajorClass {
    Miscellaneous,
    Computer,
    Phone,
    LanAccessPoint,
    AudioVideo,
    Peripheral,
    Imaging,
    Wearable,
    Toy,
    Health,
    Uncategorized,
    Reserved(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ServiceClass {
    LimitedDiscoverable,
    Positioning,
    Networking,
    Rendering,
    Capturing,
    ObjectTransfer,
    Audio,
    Telephony,
    Information,
}

impl fmt::Display for MajorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MajorClass::Miscellaneous => "Miscellaneous",
            MajorClass::Computer => "Computer",
            MajorClass::Phone => "Phone",
            MajorClass::LanAccessPoint => "LAN Access Point",
            MajorClass::AudioVideo => "Audio/Video",
            MajorClass::Peripheral => "Peripheral",
            MajorClass::Imaging => "Imaging",
            MajorClass::Wearable => "Wearable",
            MajorClass::Toy => "Toy",
            MajorClass::Health => "Health",
            MajorClass::Uncategorized => "Uncategorized",
            MajorClass::Reserved(_) => "Reserved",
        };
        f.write_str(name)
    }
}

impl fmt::Display for ServiceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ServiceClass::LimitedDiscoverable => "Limited Discoverable",
            ServiceClass::Positioning => "Positioning",
            ServiceClass::Networking => "Networking",
            ServiceClass::Rendering => "Rendering",
            ServiceClass::Capturing => "Capturing",
            ServiceClass::ObjectTransfer => "Object Transfer",
            ServiceClass::Audio => "Audio",
            ServiceClass::Telephony => "Telephony",
            ServiceClass::Information => "Information",
        };
        f.write_str(name)
    }
}

impl DeviceClass {
    pub fn major_class(self) -> MajorClass {
        match (self.0 >> 8) & 0x1f {
            0 => MajorClass::Miscellaneous,
            1 => MajorClass::Computer,
            2 => MajorClass::Phone,
            3 => MajorClass::LanAccessPoint,
            4 => MajorClass::AudioVideo,
            5 => MajorClass::Peripheral,
            6 => MajorClass::Imaging,
            7 => MajorClass::Wearable,
            8 => MajorClass::Toy,
            9 => MajorClass::Health,
            0x1f => MajorClass::Uncategorized,
            other => MajorClass::Reserved(other as u8),
        }
    }

    pub fn minor_class(self) -> Option<&'static str> {
        let minor = ((self.0 >> 2) & 0x3f) as u8;
        match self.major_class() {
            MajorClass::Computer => Some(match minor {
                0 => "Uncategorized",
                1 => "Desktop workstation",
                2 => "Server-class computer",
                3 => "Laptop",
                4 => "Handheld PC/PDA",
                5 => "Palm-size PC/PDA",
                6 => "Wearable computer",
                _ => return None,
            }),
            MajorClass::Phone => Some(match minor {
                0 => "Uncategorized",
                1 => "Cellular",
                2 => "Cordless",
                3 => "Smartphone",
                4 => "Wired modem or voice gateway",
                5 => "Common ISDN access",
                _ => return None,
            }),
            MajorClass::AudioVideo => Some(match minor {
                1 => "Wearable Headset Device",
                2 => "Hands-free Device",
                4 => "Microphone",
                5 => "Loudspeaker",
                6 => "Headphones",
                7 => "Portable Audio",
                8 => "Car audio",
                _ => return None,
            }),
            _ => None,
        }
    }

    pub fn service_classes(self) -> Vec<ServiceClass> {
        const BITS: [(u32, ServiceClass); 9] = [
            (13, ServiceClass::LimitedDiscoverable),
            (16, ServiceClass::Positioning),
            (17, ServiceClass::Networking),
            (18, ServiceClass::Rendering),
            (19, ServiceClass::Capturing),
            (20, ServiceClass::ObjectTransfer),
            (21, ServiceClass::Audio),
            (22, ServiceClass::Telephony),
            (23, ServiceClass::Information),
        ];
        BITS.iter()
            .filter(|(bit, _)| self.0 & (1 << bit) != 0)
            .map(|(_, sc)| *sc)
            .collect()
    }

    /// "Computer, Uncategorized" style text, as adapter tools print it.
    pub fn device_class_text(self) -> String {
        match self.minor_class() {
            Some(minor) => format!("{}, {}", self.major_class(), minor),
            None => self.major_class().to_string(),
        }
    }

    pub fn service_classes_text(self) -> String {
        self.service_classes()
            .iter()
            .map(|sc| sc.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Pure decode of a 24-bit class-of-device value.
pub fn decode_class(cod: u32) -> (MajorClass, Option<&'static str>, Vec<ServiceClass>) {
    debug_assert!(cod < 1 << 24);
    let class = DeviceClass(cod);
    (class.major_class(), class.minor_class(), class.service_classes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_computer_class() {
        let (major, minor, services) = decode_class(0x5a0100);
        assert_eq!(major, MajorClass::Computer);
        assert_eq!(minor, Some("Uncategorized"));
        assert_eq!(
            services,
            vec![
                ServiceClass::Networking,
                ServiceClass::Capturing,
                ServiceClass::ObjectTransfer,
                ServiceClass::Telephony,
            ]
        );
        assert_eq!(DeviceClass(0x5a0100).device_class_text(), "Computer, Uncategorized");
        assert_eq!(
            DeviceClass(0x5a0100).service_classes_text(),
            "Networking, Capturing, Object Transfer, Telephony"
        );
    }

    #[test]
    fn decodes_phone_class() {
        let (major, minor, services) = decode_class(0x500204);
        assert_eq!(major, MajorClass::Phone);
        assert_eq!(minor, Some("Cellular"));
        assert_eq!(services, vec![ServiceClass::ObjectTransfer, ServiceClass::Telephony]);
        assert_eq!(DeviceClass(0x500204).device_class_text(), "Phone, Cellular");
    }

    #[test]
    fn decodes_zero_class() {
        let (major, minor, services) = decode_class(0);
        assert_eq!(major, MajorClass::Miscellaneous);
        assert_eq!(minor, None);
        assert!(services.is_empty());
    }

    #[test]
    fn decodes_headset_class() {
        let (major, minor, services) = decode_class(0x200404);
        assert_eq!(major, MajorClass::AudioVideo);
        assert_eq!(minor, Some("Wearable Headset Device"));
        assert_eq!(services, vec![ServiceClass::Audio]);
    }
}
