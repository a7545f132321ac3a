#![no_main]
use libfuzzer_sys::fuzz_target;

use octaplex::wire::{decode_frame, encode_frame, ClientMessage};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(msg) = ClientMessage::parse(text) {
            ClientMessage::parse(&msg.to_json()).expect("serialized message parses");
        }
    }
    if let Ok((k, rgb)) = decode_frame(data) {
        assert_eq!(encode_frame(k, rgb), data);
    }
});
