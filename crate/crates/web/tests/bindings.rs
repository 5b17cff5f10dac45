use fixglue_web::{fixed_projection_json, glue_search_json, weight_distribution_json};

const E8: &str = "code 8 4 e8\n11111111\n01010101\n00110011\n00001111\n";

#[test]
fn weight_distribution_of_e8() {
    let v: serde_json::Value = serde_json::from_str(&weight_distribution_json(E8).unwrap()).unwrap();
    assert_eq!(v[0]["d"], 4);
    assert_eq!(v[0]["weights"], serde_json::json!([1, 0, 0, 0, 14, 0, 0, 0, 1]));
    assert_eq!(v[0]["self_dual"], true);
}

#[test]
fn projection_of_e8() {
    let v: serde_json::Value =
        serde_json::from_str(&fixed_projection_json(E8, "(1,2)(3,4)(5,6)(7,8)").unwrap()).unwrap();
    assert_eq!(v[0]["automorphism"], true);
    assert_eq!(v[0]["fixed_dim"], 3);
    assert_eq!(v[0]["projection"].as_array().unwrap().len(), 3);
}

#[test]
fn search_at_length_8() {
    let v: serde_json::Value = serde_json::from_str(&glue_search_json("code 4 2\n1100\n0011\n", 8, 4).unwrap()).unwrap();
    assert_eq!(v["verdict"], "CONSISTENT");
    assert!(weight_distribution_json("code 4 2\n1100\n").is_err());
}
