// Copyright 2026 The spinqc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


//! Writes the bundled programs below `crates/spinqc/programs`.

use std::path::Path;

fn main() -> std::io::Result<()> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("programs");
    let entries = spinqc::corpus::all();
    for e in &entries {
        let path = root.join(&e.path);
        std::fs::create_dir_all(path.parent().expect("file below root"))?;
        std::fs::write(&path, e.file_text())?;
    }
    println!("wrote {} programs to {}", entries.len(), root.display());
    Ok(())
}
