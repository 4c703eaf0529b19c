// CLI module placeholder
pub fn placeholder() {}
