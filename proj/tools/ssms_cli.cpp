/*
 * Copyright (C) 2026 The ssms authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end.  All state lives in one directory: key files,
// the certification directory, the queued short messages, and the
// validation gateway's log.  The last stdout line of every run is a
// machine-parsable token ("ok" or a failure reason).
//
// Exit codes: 0 success, 2 usage, 3 status/parameter validation
// failure, 4 cryptographic rejection, 5 file or environment trouble.

#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ssms/directory.hpp"
#include "ssms/error.hpp"
#include "ssms/keys.hpp"
#include "ssms/signcrypt.hpp"
#include "ssms/sms.hpp"
#include "ssms/validation.hpp"

using namespace ssms;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitStatus = 3;
constexpr int kExitCrypto = 4;
constexpr int kExitFile = 5;

constexpr char kOcspId[] = "99990001";
constexpr char kDvId[] = "99990002";
// Gateway keys are provisioned automatically; a deployment would keep
// them in an HSM, the demo keeps them in ordinary key files.
constexpr char kServerPassword[] = "server";

struct Fail {
    int exit_code;
    std::string token;
    std::string detail;
};

int map_error(const Error& e)
{
    const std::string& code = e.code();
    if (code == "bad_password" || code == "corrupt_file" ||
        code == "key_exists" || code == "rng_failure" || code == "io_error")
        return kExitFile;
    if (code == "signature_mismatch" || code == "decrypt_malformed" ||
        code == "stale_timestamp")
        return kExitCrypto;
    return kExitStatus;
}

// Shared handles over the state directory, opened lazily so commands
// only touch what they use.
struct Session {
    std::string state_dir = "state";
    std::string params_path;

    ec::DomainParams dp;
    std::optional<Directory> dir;
    std::optional<Smc> smc;
    std::optional<KeyPair> ocsp_keys, dv_keys;

    std::string path(const std::string& leaf) const
    {
        return state_dir + "/" + leaf;
    }
    std::string key_path(const std::string& id) const
    {
        return path("keys/" + id + ".key");
    }

    void load_params()
    {
        dp = ec::DomainParams::load(params_path);
        auto report = ec::validate_domain_params(dp, dp.mode);
        if (!report.ok)
            throw Fail{kExitStatus, report.first_failure,
                       "domain parameters rejected"};
    }

    void open_state()
    {
        fs::create_directories(path("keys"));
        dir.emplace(Directory::open(path("directory.csv"), dp));
        smc.emplace(Smc::load(path("smc.state")));
    }

    void save_smc() { smc->save(path("smc.state")); }

    KeyPair load_keys(const std::string& id, const std::string& password)
    {
        ec::Int sk = load_private_key(key_path(id), password, dp);
        return {sk, ec::scalar_mul(sk, dp.G, dp)};
    }

    // Creates and registers both server identities on first use.
    void ensure_servers()
    {
        for (const char* id : {kOcspId, kDvId}) {
            if (!fs::exists(key_path(id))) {
                KeyPair kp = keygen(dp, system_rng());
                store_private_key(key_path(id), kp.sk, kServerPassword, dp,
                                  system_rng());
                dir->register_key(Identity(id), kp.pk);
            }
        }
        ocsp_keys = load_keys(kOcspId, kServerPassword);
        dv_keys = load_keys(kDvId, kServerPassword);
    }

    OcspResponder responder()
    {
        return OcspResponder(Identity(kOcspId), *ocsp_keys, *dir);
    }
};

Bytes read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("io_error", "cannot read '" + path + "'");
    return Bytes(std::istreambuf_iterator<char>(in),
                 std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text).flush())
        throw Error("io_error", "cannot write '" + path + "'");
}

// Queries the status responder and insists on a usable statement.
// Returns the vouched-for public key.
ec::Point vouched_key(Session& ses, const OcspResponder& ocsp,
                      const Identity& subject, const char* role)
{
    OcspToken token = ocsp.respond(subject, system_rng());
    if (!verify_detached(token.signed_bytes(ses.dp), "", token.sig,
                         ocsp.public_key(), ses.dp))
        throw Fail{kExitStatus, "bad_server_signature", "status responder"};
    if (!verify_ocsp(token, ocsp.public_key(), ses.dp))
        throw Fail{kExitStatus,
                   std::string(role) + "_" + to_string(token.status),
                   subject.str() + " is not in good standing"};
    return *token.pk;
}

std::string claim_text(const JudgeClaim& claim, const ec::DomainParams& dp)
{
    std::string text;
    text += "sender=" + claim.sender.str() + "\n";
    text += "recipient=" + claim.recipient.str() + "\n";
    text += "R=" + to_hex(ec::encode_point(claim.R, dp)) + "\n";
    text += "C=" + to_hex(claim.C) + "\n";
    text += "M=" + to_hex(claim.M) + "\n";
    text += "k=" + to_hex(claim.k) + "\n";
    text += "s=" + to_hex(int_to_bytes_be(claim.s, dp.scalar_byte_len)) + "\n";
    return text;
}

JudgeClaim parse_claim(const std::string& path, const ec::DomainParams& dp)
{
    std::ifstream in(path);
    if (!in)
        throw Error("io_error", "cannot read '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("corrupt_file", "claim line without '='");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    for (const char* field : {"sender", "recipient", "R", "C", "M", "k", "s"})
        if (!kv.count(field))
            throw Error("corrupt_file", std::string("claim misses ") + field);

    JudgeClaim claim;
    claim.sender = Identity(kv["sender"]);
    claim.recipient = Identity(kv["recipient"]);
    claim.R = ec::decode_point(from_hex(kv["R"]), dp, false);
    claim.C = from_hex(kv["C"]);
    claim.M = from_hex(kv["M"]);
    claim.k = from_hex(kv["k"]);
    claim.s = bytes_to_int_be(from_hex(kv["s"]));
    return claim;
}

int cmd_params_validate(Session& ses, bool strict, bool test)
{
    ses.dp = ec::DomainParams::load(ses.params_path);
    ec::ParamMode mode = ses.dp.mode;
    if (strict)
        mode = ec::ParamMode::strict;
    if (test)
        mode = ec::ParamMode::test;

    auto report = ec::validate_domain_params(ses.dp, mode);
    for (const auto& check : report.checks)
        std::cout << "check " << check.name << ": "
                  << (check.passed ? "passed" : "FAILED")
                  << (check.detail.empty() ? "" : " (" + check.detail + ")")
                  << "\n";
    for (const auto& warning : report.warnings)
        std::cout << "warning " << warning << "\n";
    if (!report.ok) {
        std::cout << report.first_failure << "\n";
        return kExitStatus;
    }
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_keygen(Session& ses, const std::string& id, const std::string& password)
{
    ses.load_params();
    ses.open_state();
    static_cast<void>(Identity(id));   // reject malformed numbers up front
    if (fs::exists(ses.key_path(id)))
        throw Error("key_exists", ses.key_path(id));
    KeyPair kp = keygen(ses.dp, system_rng());
    store_private_key(ses.key_path(id), kp.sk, password, ses.dp, system_rng());
    std::cout << "pk " << to_hex(ec::encode_point(kp.pk, ses.dp)) << "\n";
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_register(Session& ses, const std::string& id, const std::string& password)
{
    ses.load_params();
    ses.open_state();
    KeyPair kp = ses.load_keys(id, password);
    CertRecord rec = ses.dir->register_key(Identity(id), kp.pk);
    std::cout << "serial " << rec.serial << "\n";
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_revoke(Session& ses, const std::string& id)
{
    ses.load_params();
    ses.open_state();
    ses.dir->revoke(Identity(id));
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_send(Session& ses, const std::string& from, const std::string& to,
             const std::string& password, std::string message,
             const std::string& message_file, bool delegate)
{
    ses.load_params();
    ses.open_state();
    ses.ensure_servers();

    Bytes m = message_file.empty() ? str_bytes(message) : read_file(message_file);
    Identity sender(from), recipient(to);
    KeyPair kp = ses.load_keys(from, password);
    OcspResponder ocsp = ses.responder();

    // Direct flow: the sender checks the recipient's standing and takes
    // the key from the signed statement.  Delegated flow: the gateway
    // re-checks everything, but composing still needs the key.
    ec::Point pk_b = vouched_key(ses, ocsp, recipient, "recipient");

    Envelope env = compose(m, kp.sk, sender, pk_b, recipient, ses.dp,
                           system_rng());
    Bytes wire = encode_envelope(env, ses.dp);
    Identity dest = delegate ? Identity(kDvId) : recipient;
    std::uint8_t ref = static_cast<std::uint8_t>(system_rng().bytes(1)[0]);
    auto segs = segment(wire, ref, kSsmsPort, kSsmsPort);
    std::size_t seg_count = segs.size();
    ses.smc->submit(sender, dest, std::move(segs));
    ses.save_smc();

    std::cout << "hash " << to_hex(sha256(wire)) << "\n";
    std::cout << "segments " << seg_count << "\n";
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_dv_pump(Session& ses)
{
    ses.load_params();
    ses.open_state();
    ses.ensure_servers();
    OcspResponder ocsp = ses.responder();
    DvServer gateway(Identity(kDvId), *ses.dv_keys, *ses.dir, ocsp, *ses.smc,
                     ses.path("dv.log"));
    std::size_t n = gateway.pump(system_rng());
    ses.save_smc();
    std::cout << "processed " << n << "\n";
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_recv(Session& ses, const std::string& id, const std::string& password,
             const std::string& claim_path)
{
    ses.load_params();
    ses.open_state();
    ses.ensure_servers();

    Identity me(id);
    KeyPair kp = ses.load_keys(id, password);
    OcspResponder ocsp = ses.responder();
    Identity gateway_id(kDvId);

    auto inbox = ses.smc->poll(me);
    ses.save_smc();
    if (inbox.empty()) {
        std::cout << "no messages\n";
        std::cout << "ok\n";
        return kExitOk;
    }

    std::string first_failure;
    int failure_exit = kExitCrypto;
    auto note_failure = [&](const std::string& token, int exit_code) {
        if (first_failure.empty()) {
            first_failure = token;
            failure_exit = exit_code;
        }
    };

    std::optional<JudgeClaim> last_claim;
    auto handle_message = [&](const SmcMessage& msg, Bytes env_bytes) {
        Identity claimed_sender;
        DeliverOptions opts;
        opts.message_timestamp = msg.timestamp;
        opts.now = static_cast<std::uint64_t>(std::time(nullptr));

        if (msg.from == gateway_id) {
            // Forwarded by the validation gateway: check its signature
            // and skip the local point check it already did.
            DvPayload payload = decode_dv_payload(env_bytes, ses.dp, false);
            if (!payload.response.validated()) {
                std::cout << "gateway report: "
                          << to_string(payload.response.error) << "\n";
                note_failure(to_string(payload.response.error), kExitStatus);
                return;
            }
            if (!payload.response.sig ||
                !verify_detached(payload.response.signed_bytes(), "",
                                 *payload.response.sig, ses.dv_keys->pk, ses.dp))
                throw Fail{kExitStatus, "bad_server_signature",
                           "validation gateway"};
            env_bytes = payload.envelope;
            claimed_sender = payload.response.sender;
            opts.check_point = false;
        } else {
            Envelope probe = decode_envelope(env_bytes, ses.dp, false);
            claimed_sender = probe.sender;
        }

        ec::Point pk_a = vouched_key(ses, ocsp, claimed_sender, "sender");
        DeliverResult res = deliver_envelope_bytes(env_bytes, kp.sk, me, pk_a,
                                                   claimed_sender, ses.dp, opts);
        if (res.status != DeliverStatus::ok) {
            std::cout << "from " << claimed_sender.str() << ": <"
                      << to_string(res.status) << ">\n";
            note_failure(to_string(res.status), kExitCrypto);
            return;
        }

        std::cout << "from " << claimed_sender.str() << ": "
                  << std::string(res.plaintext.begin(), res.plaintext.end())
                  << "\n";
        Envelope env = decode_envelope(env_bytes, ses.dp, false);
        last_claim = JudgeClaim{claimed_sender, me, env.R, env.C,
                                res.plaintext, res.session_key, env.s};
    };

    for (const SmcMessage& msg : inbox) {
        ReassembleResult r = reassemble(msg.segments);
        if (r.status != ReassembleStatus::ok) {
            std::cout << "from " << msg.from.str() << ": <"
                      << to_string(r.status) << ">\n";
            note_failure(to_string(r.status), kExitCrypto);
            continue;
        }
        // A message the directory refuses (revoked sender, broken gateway
        // signature) should not block the rest of the inbox.
        try {
            handle_message(msg, std::move(r.payload));
        } catch (const Fail& f) {
            std::cout << "from " << msg.from.str() << ": <" << f.token
                      << ">\n";
            note_failure(f.token, f.exit_code);
        } catch (const Error& e) {
            std::cout << "from " << msg.from.str() << ": <" << e.code()
                      << ">\n";
            note_failure(e.code(), map_error(e));
        }
    }

    if (!claim_path.empty()) {
        if (!last_claim)
            throw Error("io_error", "no delivered message to export");
        write_file(claim_path, claim_text(*last_claim, ses.dp));
    }

    if (!first_failure.empty()) {
        std::cout << first_failure << "\n";
        return failure_exit;
    }
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_judge(Session& ses, const std::string& claim_path)
{
    ses.load_params();
    ses.open_state();
    JudgeClaim claim = parse_claim(claim_path, ses.dp);
    auto rec = ses.dir->lookup(claim.sender);
    if (!rec)
        throw Fail{kExitStatus, "sender_unknown",
                   claim.sender.str() + " is not registered"};
    JudgeVerdict verdict = judge_verify(claim, rec->pk, ses.dp);
    std::cout << to_string(verdict) << "\n";
    return verdict == JudgeVerdict::sender_sent ? kExitOk : kExitCrypto;
}

int cmd_ocsp_status(Session& ses, const std::string& id)
{
    ses.load_params();
    ses.open_state();
    ses.ensure_servers();
    OcspResponder ocsp = ses.responder();
    OcspToken token = ocsp.respond(Identity(id), system_rng());
    if (!verify_detached(token.signed_bytes(ses.dp), "", token.sig,
                         ocsp.public_key(), ses.dp))
        throw Fail{kExitStatus, "bad_server_signature", "status responder"};
    std::cout << "status " << to_string(token.status) << "\n";
    std::cout << "pk_verified " << (token.pk_verified ? "true" : "false") << "\n";
    if (token.pk)
        std::cout << "pk " << to_hex(ec::encode_point(*token.pk, ses.dp)) << "\n";
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_dv_log(Session& ses, const std::string& sender,
               const std::string& recipient, const std::string& hash_hex)
{
    ses.load_params();
    ses.open_state();
    ses.ensure_servers();
    OcspResponder ocsp = ses.responder();
    Smc scratch;
    DvServer gateway(Identity(kDvId), *ses.dv_keys, *ses.dir, ocsp, scratch,
                     ses.path("dv.log"));
    Bytes hash = from_hex(hash_hex);
    bool found = gateway.log_query(Identity(sender), Identity(recipient), hash);
    std::cout << (found ? "found" : "not_found") << "\n";
    return found ? kExitOk : kExitCrypto;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"signcrypted short-message tool"};
    app.require_subcommand(1);
    // Let --state and --params appear after the subcommand name too.
    app.fallthrough();

    Session ses;
    app.add_option("-s,--state", ses.state_dir, "state directory")
        ->capture_default_str();
    app.add_option("-p,--params", ses.params_path, "domain parameter file")
        ->required();

    auto* validate = app.add_subcommand("params-validate",
                                        "run the parameter acceptance checks");
    bool strict = false, test = false;
    validate->add_flag("--strict", strict, "force strict mode");
    validate->add_flag("--test", test, "force test mode");

    auto* keygen_cmd = app.add_subcommand("keygen", "create a key file");
    std::string id, password;
    keygen_cmd->add_option("--id", id, "subscriber number")->required();
    keygen_cmd->add_option("--password", password, "key file password")->required();

    auto* register_cmd =
        app.add_subcommand("register", "publish a key in the directory");
    register_cmd->add_option("--id", id)->required();
    register_cmd->add_option("--password", password)->required();

    auto* revoke_cmd = app.add_subcommand("revoke", "revoke a directory entry");
    revoke_cmd->add_option("--id", id)->required();

    auto* send = app.add_subcommand("send", "signcrypt and queue a message");
    std::string from, to, message, message_file;
    bool delegate = false;
    send->add_option("--from", from)->required();
    send->add_option("--to", to)->required();
    send->add_option("--password", password)->required();
    send->add_option("--message", message);
    send->add_option("--message-file", message_file);
    send->add_flag("--delegate", delegate,
                   "route through the validation gateway");

    auto* pump = app.add_subcommand("dv-pump", "run the validation gateway");

    auto* recv = app.add_subcommand("recv", "poll and open queued messages");
    std::string claim_path;
    recv->add_option("--id", id)->required();
    recv->add_option("--password", password)->required();
    recv->add_option("--export-claim", claim_path,
                     "write a dispute claim for the last message");

    auto* judge = app.add_subcommand("judge", "adjudicate a dispute claim");
    judge->add_option("--claim", claim_path)->required();

    auto* ocsp_status =
        app.add_subcommand("ocsp-status", "query certificate status");
    ocsp_status->add_option("--id", id)->required();

    auto* dv_log = app.add_subcommand("dv-log", "query the gateway audit log");
    std::string sender_opt, recipient_opt, hash_opt;
    dv_log->add_option("--sender", sender_opt)->required();
    dv_log->add_option("--recipient", recipient_opt)->required();
    dv_log->add_option("--hash", hash_opt)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed())
            return cmd_params_validate(ses, strict, test);
        if (keygen_cmd->parsed())
            return cmd_keygen(ses, id, password);
        if (register_cmd->parsed())
            return cmd_register(ses, id, password);
        if (revoke_cmd->parsed())
            return cmd_revoke(ses, id);
        if (send->parsed())
            return cmd_send(ses, from, to, password, message, message_file,
                            delegate);
        if (pump->parsed())
            return cmd_dv_pump(ses);
        if (recv->parsed())
            return cmd_recv(ses, id, password, claim_path);
        if (judge->parsed())
            return cmd_judge(ses, claim_path);
        if (ocsp_status->parsed())
            return cmd_ocsp_status(ses, id);
        if (dv_log->parsed())
            return cmd_dv_log(ses, sender_opt, recipient_opt, hash_opt);
    } catch (const Fail& f) {
        std::cerr << "error: " << f.token << ": " << f.detail << "\n";
        std::cout << f.token << "\n";
        return f.exit_code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << e.code() << "\n";
        return map_error(e);
    }
    return kExitUsage;
}
