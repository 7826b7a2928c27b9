// Encodes a short note with the canonical 36-symbol alphabet, encrypts
// the digit stream with the additive keystream, and round-trips back.

#include "pptkit/pptkit.hpp"

#include <iostream>
#include <string>

int main() {
  using namespace pptkit;
  const std::string note = "MEET AT NOON.";
  const std::uint64_t key = 7;

  std::vector<ClassLabel> labels = encode_text(note);
  std::string plain_digits;
  for (ClassLabel l : labels) plain_digits.push_back(static_cast<char>('0' + class_digit(l)));

  std::string cipher = keystream_encrypt(plain_digits, key);
  std::string recovered_digits = keystream_decrypt(cipher, key);

  std::vector<ClassLabel> recovered;
  for (char ch : recovered_digits) recovered.push_back(class_from_digit(ch - '0'));

  std::cout << "note:      " << note << '\n';
  std::cout << "labels:    " << labels_to_letters(labels) << '\n';
  std::cout << "digits:    " << plain_digits << '\n';
  std::cout << "cipher:    " << cipher << '\n';
  std::cout << "decoded:   " << decode_text(recovered) << '\n';
  return recovered == labels ? 0 : 1;
}
