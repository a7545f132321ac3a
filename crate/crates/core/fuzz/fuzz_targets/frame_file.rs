#![no_main]
use libfuzzer_sys::fuzz_target;

use octaplex::framefile::FrameFile;

fuzz_target!(|data: &[u8]| {
    if let Ok(file) = FrameFile::parse(data) {
        let n = file.header.frame_bytes();
        assert_eq!(file.frames().count(), file.header.frame_count as usize);
        assert!(file.frames().all(|f| f.len() == n));
    }
});
