// Reading and writing the JSON document format.

use dendrop::catalogue::builtin_catalogue;
use dendrop::document::{emit_document, parse_document, Document, Entry, Labels, Payload, ResultSet};
use dendrop::exactlin::FieldSpec;

const N2: &str = r#"{"schema_version":"1","field":{"kind":"rational"},
  "payload":{"kind":"algebra","dim":2,"basis":["e1","e2"],
             "product":[[["0","0"],["0","0"]],[["0","0"],["1","0"]]]}}"#;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // dense input, sparse canonical output
    let doc = parse_document(N2.as_bytes())?;
    let text = emit_document(&doc);
    println!("{text}");
    assert_eq!(parse_document(text.as_bytes())?, doc);

    let entries = builtin_catalogue()
        .into_iter()
        .map(|e| Entry {
            labels: Labels {
                name: Some(e.name.into()),
                typo_corrected: e.typo_corrected,
                ..Default::default()
            },
            payload: Payload::DendriformDi(e.dendriform),
        })
        .collect();
    let mut rs = ResultSet {
        what: "catalogue".into(),
        ..Default::default()
    };
    rs.groups.insert("entries".into(), entries);
    let cat = Document::new(FieldSpec::Rational, Payload::ResultSet(rs));
    let text = emit_document(&cat);
    println!("catalogue document: {} bytes", text.len());
    assert_eq!(parse_document(text.as_bytes())?, cat);

    match parse_document(br#"{"schema_version":"1","field":{"kind":"rational"},"payload":{"kind":"algebra","dim":1,"product":[{"i":0,"j":0,"k":0,"c":0.5}]}}"#) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
